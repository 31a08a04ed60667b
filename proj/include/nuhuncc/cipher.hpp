#ifndef NUHUNCC_CIPHER_HPP
#define NUHUNCC_CIPHER_HPP

#include "nuhuncc/bits.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace nuhuncc::cipher {

/// Fixed-size block transform behind which the public-key scheme plugs in.
/// encrypt_block may consume randomness; decrypt_block must be its exact
/// inverse and throw CryptoError on malformed input.
class BlockCipher {
public:
    virtual ~BlockCipher() = default;
    virtual std::size_t plaintext_bits() const = 0;
    virtual std::size_t ciphertext_bits() const = 0;
    virtual BitVec encrypt_block(const BitVec& m, Rng& rng) const = 0;
    virtual BitVec decrypt_block(const BitVec& c) const = 0;
    virtual std::string name() const = 0;

    /// ciphertext expansion in link units: c * (cb - pb) / pb for c = 1
    double expansion_r() const {
        return static_cast<double>(ciphertext_bits() - plaintext_bits()) /
               static_cast<double>(plaintext_bits());
    }
};

/// Identity cipher (r = 0). Accepts blocks up to block_bits; shorter final
/// chunks pass through unchanged, so pipelines collapse bit-identically.
class NullCipher : public BlockCipher {
public:
    explicit NullCipher(std::size_t block_bits = 64) : block_(block_bits) {}
    std::size_t plaintext_bits() const override { return block_; }
    std::size_t ciphertext_bits() const override { return block_; }
    BitVec encrypt_block(const BitVec& m, Rng&) const override;
    BitVec decrypt_block(const BitVec& c) const override;
    std::string name() const override { return "null"; }

private:
    std::size_t block_;
};

/// Keyed toy cipher for tests: 32 -> 96 bits, randomized by a 32-bit nonce
/// and carrying a check word so tampering is detected. Not secure; it only
/// exercises the r > 0 paths.
class XorToyCipher : public BlockCipher {
public:
    explicit XorToyCipher(std::uint64_t key_seed);
    std::size_t plaintext_bits() const override { return 32; }
    std::size_t ciphertext_bits() const override { return 96; }
    BitVec encrypt_block(const BitVec& m, Rng& rng) const override;
    BitVec decrypt_block(const BitVec& c) const override;
    std::string name() const override { return "xor-toy"; }

private:
    std::uint32_t k1_, k2_, k3_;
};

using CipherPtr = std::shared_ptr<const BlockCipher>;

} // namespace nuhuncc::cipher

#endif
