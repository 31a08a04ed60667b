#ifndef NUHUNCC_MCELIECE_HPP
#define NUHUNCC_MCELIECE_HPP

#include "nuhuncc/bits.hpp"
#include "nuhuncc/cipher.hpp"
#include "nuhuncc/gf.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nuhuncc::mce {

/// Binary Goppa code parameters: codes of length n_g over GF(2), built from
/// an irreducible degree-t polynomial over GF(2^d) and a support of n_g
/// distinct field elements. The dimension c_g = n_g - rank(parity) comes out
/// of key generation and satisfies c_g >= n_g - d*t.
struct GoppaParams {
    unsigned d = 10;
    unsigned n_g = 1024;
    unsigned t = 50;

    void validate() const;
};

struct PublicKey {
    GoppaParams params;
    unsigned c_g = 0;
    BitMatrix g_pub; // c_g x n_g
    double rate() const { return static_cast<double>(c_g) / params.n_g; }
};

struct SecretKey {
    GoppaParams params;
    unsigned c_g = 0;
    gf::FieldPtr field;                 // GF(2^d)
    std::vector<std::uint32_t> goppa;   // monic goppa polynomial, ascending coeffs
    std::vector<std::uint32_t> support; // L
    std::vector<std::uint32_t> perm;    // ciphertext column j comes from S*G_g column perm[j]
    BitMatrix scrambler;                // S
    BitMatrix scrambler_inv;            // S^-1
    BitMatrix g_goppa;                  // systematic generator, c_g x n_g
    std::vector<std::uint32_t> info_cols;

    // decode precomputation
    std::vector<std::vector<std::uint32_t>> inv_lin; // (z - L_i)^-1 mod g
    std::vector<std::uint32_t> sqrt_z;               // sqrt(z) mod g
};

struct KeyPair {
    PublicKey pub;
    SecretKey sec;
};

/// Deterministic key generation from a seed. Throws CryptoError if no
/// irreducible polynomial is found within the attempt bound.
KeyPair keygen(const GoppaParams& params, std::uint64_t rng_seed);

/// kappa = m * G_pub + a for a uniform weight-t error vector a.
BitVec encrypt(const PublicKey& pub, const BitVec& m, Rng& rng);

/// Patterson decoding; exact inverse of encrypt for error weight <= t.
/// Throws CryptoError on any inconsistency, never returns a wrong message
/// silently (the recovered codeword is re-checked against the generator).
BitVec decrypt(const SecretKey& sec, const BitVec& kappa);

/// Exhaustive minimum distance of the underlying Goppa code; test helper,
/// feasible only for c_g <= ~20.
unsigned code_min_distance(const SecretKey& sec);

/// BlockCipher adapter: plaintext c_g bits, ciphertext n_g bits.
class McElieceCipher : public cipher::BlockCipher {
public:
    explicit McElieceCipher(KeyPair kp) : kp_(std::move(kp)) {}
    McElieceCipher(PublicKey pub) : kp_{std::move(pub), {}}, enc_only_(true) {}

    std::size_t plaintext_bits() const override { return kp_.pub.c_g; }
    std::size_t ciphertext_bits() const override { return kp_.pub.params.n_g; }
    BitVec encrypt_block(const BitVec& m, Rng& rng) const override {
        return encrypt(kp_.pub, m, rng);
    }
    BitVec decrypt_block(const BitVec& c) const override;
    std::string name() const override { return "mceliece"; }

    const KeyPair& keys() const { return kp_; }

private:
    KeyPair kp_;
    bool enc_only_ = false;
};

/// Key files ("NUHMCE1"): params header plus packed matrices; the secret key
/// stores S, the goppa coefficients, the support and the permutation, and
/// rebuilds the derived material on load.
void save_public_key(const PublicKey& pub, const std::string& path);
PublicKey load_public_key(const std::string& path);
void save_secret_key(const SecretKey& sec, const std::string& path);
SecretKey load_secret_key(const std::string& path);

} // namespace nuhuncc::mce

#endif
