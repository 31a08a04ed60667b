#ifndef NUHUNCC_POLAR_HPP
#define NUHUNCC_POLAR_HPP

#include "nuhuncc/bits.hpp"

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace nuhuncc::polar {

/// Bernoulli source over {0,1}.
struct SourceModel {
    double p = 0.5;

    double entropy() const {
        if (p <= 0.0 || p >= 1.0) return 0.0;
        return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
    }
    /// Inverse of the binary entropy function on [0, 1/2].
    static double p_for_entropy(double h);
};

struct ConstructionMeta {
    std::string method = "mc-genie-sc";
    std::uint64_t samples = 0;
    std::uint64_t rng_seed = 0;
};

/// Index partition of the polarized bits of a Bernoulli(p) source at block
/// length n: high-entropy set, low-entropy set, and the intermediate set
/// whose bits get one-time padded by the shared seed. Thresholds use
/// delta_n = 2^(-n^beta); indices sitting exactly on a threshold fall into
/// the intermediate set.
struct PolarProfile {
    std::uint32_t n = 0;
    double beta = 0.3;
    double p = 0.5;
    std::vector<double> entropies;      // per-index conditional entropy estimates
    std::vector<std::uint32_t> high_set; // entropy > 1 - delta_n, ascending
    std::vector<std::uint32_t> low_set;  // entropy < delta_n, ascending
    std::vector<std::uint32_t> mid_set;  // the rest, ascending
    ConstructionMeta meta;

    double delta_n() const { return std::exp2(-std::pow(static_cast<double>(n), beta)); }
    std::uint32_t d_j() const { return static_cast<std::uint32_t>(mid_set.size()); }
    std::uint32_t n_tilde() const {
        return static_cast<std::uint32_t>(high_set.size() + mid_set.size());
    }

    /// Verifies the three sets are disjoint, ascending, and cover 0..n-1.
    void validate() const;

    /// Hand-built profile for tests; entropies are filled with placeholder
    /// values consistent with the partition.
    static PolarProfile toy(std::uint32_t n, double beta, double p,
                            std::vector<std::uint32_t> high,
                            std::vector<std::uint32_t> mid);
};

/// A = v^T * G_n over GF(2), where G_n is the n x n polarization transform
/// (bit-reversal permutation times the m-fold Kronecker power of [1 0; 1 1]).
/// O(n log n) butterfly; n must be a power of two. The transform is an
/// involution: applying it twice gives back the input.
BitVec polar_transform(const BitVec& v);

/// Monte-Carlo profile construction: estimates every H(A^(j) | A^(j-1)) by
/// genie-aided successive cancellation over `samples` draws from the source,
/// then partitions indices against delta_n. Deterministic for a fixed seed
/// regardless of thread count (per-sample RNG streams, fixed merge order).
/// threads = 0 picks the hardware concurrency.
PolarProfile construct_profile(const SourceModel& src, std::uint32_t n, double beta,
                               std::uint64_t samples, std::uint64_t rng_seed,
                               unsigned threads = 0);

/// M = [A[high], A[mid] xor seed]; indices ascending within each group.
BitVec source_encode(const BitVec& v, const BitVec& seed, const PolarProfile& prof);

/// Inverse of source_encode: un-pads the mid bits, then runs successive
/// cancellation with the high/mid positions pinned and the low positions
/// decided by maximum posterior under the source prior (ties resolve to 0).
BitVec source_decode(const BitVec& msg, const BitVec& seed, const PolarProfile& prof,
                     const SourceModel& src);

void save_profile(const PolarProfile& prof, const std::string& path);
PolarProfile load_profile(const std::string& path);

} // namespace nuhuncc::polar

#endif
