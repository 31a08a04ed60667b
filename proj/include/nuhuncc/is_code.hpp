#ifndef NUHUNCC_IS_CODE_HPP
#define NUHUNCC_IS_CODE_HPP

#include "nuhuncc/bits.hpp"
#include "nuhuncc/gf.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace nuhuncc::isc {

/// Linear individual-security coset code over GF(2^mu) (mu >= ell) or a
/// prime field. The encoding matrix stacks the null-space part G* (whose
/// k_s rows carry the protected symbols, selecting the coset) on top of the
/// code generator G (whose w rows carry the mixing symbols).
///
/// Decode identities (as built; H is normalized so H G*^T is the identity):
///   H  G^T  = 0,  H  G*^T = I_ks   ->  m_ks = H x
///   G~ G*^T = 0,  G~ G^T  = I_w    ->  m_w  = G~ x
struct LinearIsCode {
    gf::FieldPtr field;
    unsigned ell = 0; // links
    unsigned ks = 0;  // protected symbols per column
    unsigned w = 0;   // ell - ks
    std::uint64_t rng_seed = 0;

    gf::Matrix g_star; // ks x ell
    gf::Matrix g;      // w x ell
    gf::Matrix g_is;   // ell x ell, [G*; G]
    gf::Matrix h;      // ks x ell
    gf::Matrix g_tilde; // w x ell

    /// Deterministic construction. Binary extensions use a Gabidulin-style
    /// Moore matrix over a normal basis (maximum rank distance by
    /// construction); prime fields fall back to seeded rejection sampling of
    /// an invertible encoding matrix.
    static LinearIsCode build(gf::FieldPtr field, unsigned ell, unsigned ks,
                              std::uint64_t rng_seed);

    /// Builds from an explicit ell x ell encoding matrix (top ks rows = G*).
    static LinearIsCode from_matrix(gf::FieldPtr field, unsigned ks,
                                    const gf::Matrix& g_is, std::uint64_t rng_seed = 0);

    /// Seeded random full-rank construction without the mu >= ell secrecy
    /// requirement; used for enumeration studies on small fields.
    static LinearIsCode build_random(gf::FieldPtr field, unsigned ell, unsigned ks,
                                     std::uint64_t rng_seed);

    /// X with X^T = M^T G_IS; column j of X depends only on column j of M.
    gf::Matrix encode(const gf::Matrix& m) const;

    /// Exact inverse on noiseless links: stacks [H X; G~ X].
    gf::Matrix decode(const gf::Matrix& x) const;

    /// Throws if any of the construction identities fail.
    void check_identities() const;
};

struct NonlinearDecodeResult {
    enum class Status { Ok, Ambiguous, Absent };
    Status status = Status::Ok;
    BitVec bits;               // bin then offset bits, LSB-first, when Ok
    std::uint32_t ambiguity = 0; // cells sharing the codeword when Ambiguous
    bool ok() const { return status == Status::Ok; }
};

/// Random binning code: 2^ks bins of 2^kw codewords, each ell uniform bits,
/// kw = ell - ks. Encoding maps a column bijectively onto a table cell;
/// decoding fails explicitly on codewords that appear in more than one cell
/// (or in none, for words never drawn).
class NonlinearIsCode {
public:
    static NonlinearIsCode build(unsigned ell, unsigned w, unsigned ell_eps,
                                 std::uint64_t rng_seed);

    unsigned ell() const { return ell_; }
    unsigned w() const { return w_; }
    unsigned ell_eps() const { return ell_eps_; }
    unsigned ks() const { return ks_; }
    unsigned kw() const { return kw_; }
    std::uint64_t rng_seed() const { return rng_seed_; }

    BitVec encode(const BitVec& column) const;
    NonlinearDecodeResult decode(const BitVec& x) const;

    std::uint32_t word(std::uint32_t bin, std::uint32_t offset) const {
        return codebook_[(std::size_t{bin} << kw_) | offset];
    }
    /// Number of table cells whose codeword also appears elsewhere.
    std::size_t duplicate_cells() const { return duplicate_cells_; }

private:
    unsigned ell_ = 0, w_ = 0, ell_eps_ = 0, ks_ = 0, kw_ = 0;
    std::uint64_t rng_seed_ = 0;
    std::vector<std::uint32_t> codebook_; // bin-major
    // word -> (cell index, number of cells holding this word)
    std::unordered_map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> lookup_;
    std::size_t duplicate_cells_ = 0;
};

/// Code descriptor file ("NUHCODE1"): codec kind, field, dimensions, seed,
/// and for the linear code the audit matrices G_IS, H, G~.
void save_linear(const LinearIsCode& code, const std::string& path);
LinearIsCode load_linear(const std::string& path);
void save_nonlinear(const NonlinearIsCode& code, const std::string& path);
NonlinearIsCode load_nonlinear(const std::string& path);

} // namespace nuhuncc::isc

#endif
