#include "nuhuncc/polar.hpp"
#include "nuhuncc/errors.hpp"
#include "nuhuncc/opcount.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstring>
#include <fstream>
#include <mutex>
#include <thread>

namespace nuhuncc::polar {

namespace {

bool is_pow2(std::uint32_t n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned log2u(std::uint32_t n) {
    unsigned m = 0;
    while ((std::uint32_t{1} << m) < n) ++m;
    return m;
}

std::uint32_t bit_reverse(std::uint32_t x, unsigned bits) {
    std::uint32_t r = 0;
    for (unsigned i = 0; i < bits; ++i) {
        r = (r << 1) | (x & 1);
        x >>= 1;
    }
    return r;
}

} // namespace

double SourceModel::p_for_entropy(double h) {
    if (h <= 0.0) return 0.0;
    if (h >= 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        SourceModel m{mid};
        (m.entropy() < h ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

void PolarProfile::validate() const {
    if (!is_pow2(n)) throw UsageError("profile: n must be a power of two");
    std::vector<std::uint8_t> seen(n, 0);
    auto mark = [&](const std::vector<std::uint32_t>& set) {
        std::uint32_t prev = 0;
        bool first = true;
        for (auto j : set) {
            if (j >= n || seen[j] || (!first && j <= prev))
                throw FormatError("profile: index sets are not a sorted partition");
            seen[j] = 1;
            prev = j;
            first = false;
        }
    };
    mark(high_set);
    mark(low_set);
    mark(mid_set);
    for (std::uint32_t j = 0; j < n; ++j)
        if (!seen[j]) throw FormatError("profile: index sets do not cover 0..n-1");
}

PolarProfile PolarProfile::toy(std::uint32_t n, double beta, double p,
                               std::vector<std::uint32_t> high,
                               std::vector<std::uint32_t> mid) {
    PolarProfile prof;
    prof.n = n;
    prof.beta = beta;
    prof.p = p;
    prof.high_set = std::move(high);
    prof.mid_set = std::move(mid);
    std::vector<std::uint8_t> used(n, 0);
    for (auto j : prof.high_set) used[j] = 1;
    for (auto j : prof.mid_set) used[j] = 1;
    for (std::uint32_t j = 0; j < n; ++j)
        if (!used[j]) prof.low_set.push_back(j);
    prof.entropies.assign(n, 0.0);
    for (auto j : prof.high_set) prof.entropies[j] = 1.0;
    for (auto j : prof.mid_set) prof.entropies[j] = 0.5;
    prof.meta.method = "toy";
    prof.validate();
    return prof;
}

// ---------------------------------------------------------------------------
// Transform

namespace {

// butterfly masks for in-word stages, stride 1..32
constexpr std::uint64_t kStageMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

// y[i] ^= y[i + 2^s] for every i whose bit s is zero; full pass over all stages
// computes the superset-xor (Kronecker-power) transform in place.
void butterfly_inplace(std::vector<std::uint64_t>& w, std::uint32_t n) {
    const unsigned m = log2u(n);
    for (unsigned s = 0; s < m; ++s) {
        if (s < 6) {
            const std::uint64_t mask = kStageMask[s];
            const unsigned shift = 1u << s;
            for (auto& word : w) word ^= (word >> shift) & mask;
        } else {
            const std::size_t stride = std::size_t{1} << (s - 6); // in words
            for (std::size_t base = 0; base < w.size(); base += 2 * stride)
                for (std::size_t i = 0; i < stride; ++i)
                    w[base + i] ^= w[base + i + stride];
        }
    }
}

} // namespace

BitVec polar_transform(const BitVec& v) {
    const auto n = static_cast<std::uint32_t>(v.size());
    if (!is_pow2(n)) throw UsageError("polar_transform: length must be a power of two");
    const unsigned m = log2u(n);

    // bit-reversal permutation, then the butterfly stages
    BitVec a(n);
    for (std::uint32_t i = 0; i < n; ++i)
        if (v.get(i)) a.set(bit_reverse(i, m), 1);
    butterfly_inplace(a.words(), n);
    if (n % 64 != 0 && !a.words().empty())
        a.words().back() &= (std::uint64_t{1} << (n % 64)) - 1;

    // accounting convention: three binary operations per butterfly
    // (one addition, two register moves) -> 3 * n * log2(n) / 2 per call
    opcount::add_polar_butterfly(3ull * n * m / 2);
    return a;
}

// ---------------------------------------------------------------------------
// Successive cancellation core, soft values s = P(0) - P(1).
//
// Kernel per butterfly pair (b1, b2) with polarized bits u1 = b1^b2, u2 = b2:
//   f (u1 unknown):        s_f = s1 * s2
//   g (u1 known, sgn = +/-1): s_g = (s2 + sgn * s1) / (1 + sgn * s1 * s2)
// Leaves are visited in natural polarized order; the hard array assembled
// bottom-up is the channel-side word, so the root hard output equals v.

namespace {

struct ScScratch {
    // slot L holds child-sized buffers for a node of length n >> L
    std::vector<std::vector<double>> soft;
    std::vector<std::vector<std::uint8_t>> hard_left;
    std::vector<std::vector<std::uint8_t>> true_f; // genie mode only
    // channel position -> recursion position (bit reversal): feeding the
    // recursion a P_n-permuted channel word makes it visit the polarized
    // bits in natural index order, matching the transform's row permutation
    std::vector<std::uint32_t> rev;

    void init(std::uint32_t n, bool genie) {
        const unsigned m = log2u(n);
        soft.resize(m);
        hard_left.resize(m);
        if (genie) true_f.resize(m);
        for (unsigned level = 0; level < m; ++level) {
            const std::size_t len = std::size_t{n} >> (level + 1);
            soft[level].resize(len);
            hard_left[level].resize(len);
            if (genie) true_f[level].resize(len);
        }
        rev.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) rev[i] = bit_reverse(i, m);
    }
};

// Genie pass: leaves forced to the true polarized bits carried by `truth`;
// realized posterior surprisals accumulate into ent_sum.
void genie_pass(ScScratch& sc, unsigned level, double* x, const std::uint8_t* truth,
                std::uint8_t* hard_out, std::size_t len, std::size_t leaf_base,
                double* ent_sum) {
    if (len == 1) {
        const std::uint8_t a = truth[0];
        const double s = x[0];
        double p_true = a ? 0.5 * (1.0 - s) : 0.5 * (1.0 + s);
        if (p_true < 1e-300) p_true = 1e-300;
        ent_sum[leaf_base] -= std::log2(p_true);
        hard_out[0] = a;
        return;
    }
    const std::size_t h = len / 2;
    double* child = sc.soft[level].data();
    std::uint8_t* cl = sc.hard_left[level].data();
    std::uint8_t* tf = sc.true_f[level].data();

    for (std::size_t i = 0; i < h; ++i) {
        child[i] = x[i] * x[i + h];
        tf[i] = truth[i] ^ truth[i + h];
    }
    genie_pass(sc, level + 1, child, tf, cl, h, leaf_base, ent_sum);

    for (std::size_t i = 0; i < h; ++i) {
        const double sgn = cl[i] ? -1.0 : 1.0;
        double denom = 1.0 + sgn * x[i] * x[i + h];
        if (denom < 1e-300) denom = 1e-300;
        child[i] = (x[i + h] + sgn * x[i]) / denom;
    }
    genie_pass(sc, level + 1, child, truth + h, hard_out + h, h, leaf_base + h, ent_sum);

    for (std::size_t i = 0; i < h; ++i) hard_out[i] = cl[i] ^ hard_out[i + h];
}

// Decode pass: leaves come from `known` where knowledge exists (values 0/1,
// 2 = decide by posterior, ties to 0). Root hard output is the decoded v.
void decode_pass(ScScratch& sc, unsigned level, double* x, const std::uint8_t* known,
                 std::uint8_t* hard_out, std::size_t len, std::size_t leaf_base) {
    if (len == 1) {
        const std::uint8_t k = known[leaf_base];
        if (k != 2) hard_out[0] = k;
        else hard_out[0] = x[0] >= 0.0 ? 0 : 1;
        return;
    }
    const std::size_t h = len / 2;
    double* child = sc.soft[level].data();
    std::uint8_t* cl = sc.hard_left[level].data();

    for (std::size_t i = 0; i < h; ++i) child[i] = x[i] * x[i + h];
    decode_pass(sc, level + 1, child, known, cl, h, leaf_base);

    for (std::size_t i = 0; i < h; ++i) {
        const double sgn = cl[i] ? -1.0 : 1.0;
        double denom = 1.0 + sgn * x[i] * x[i + h];
        if (denom < 1e-300) denom = 1e-300;
        child[i] = (x[i + h] + sgn * x[i]) / denom;
    }
    decode_pass(sc, level + 1, child, known, hard_out + h, h, leaf_base + h);

    for (std::size_t i = 0; i < h; ++i) hard_out[i] = cl[i] ^ hard_out[i + h];
}

} // namespace

PolarProfile construct_profile(const SourceModel& src, std::uint32_t n, double beta,
                               std::uint64_t samples, std::uint64_t rng_seed,
                               unsigned threads) {
    if (!is_pow2(n)) throw UsageError("construct_profile: n must be a power of two");
    if (beta < 0.0 || beta >= 0.5) throw UsageError("construct_profile: beta must be in [0, 0.5)");
    if (samples < 1000) throw UsageError("construct_profile: need at least 1000 samples");
    if (src.p < 0.0 || src.p > 1.0) throw UsageError("construct_profile: p must be in [0,1]");

    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
    }
    threads = std::min<unsigned>(threads, 64);

    const double prior = 1.0 - 2.0 * src.p; // soft value of a source bit

    // Samples are processed in fixed blocks whose partial sums merge in block
    // order, so entropies are bit-identical for any thread count. Per-sample
    // RNG streams depend only on (seed, sample index).
    constexpr std::uint64_t kBlock = 128;
    const std::uint64_t nblocks = (samples + kBlock - 1) / kBlock;

    std::vector<double> ent_total(n, 0.0);
    std::atomic<std::uint64_t> next_block{0};
    std::uint64_t merged = 0;
    std::mutex merge_mtx;
    std::condition_variable merge_cv;

    auto worker = [&]() {
        ScScratch sc;
        sc.init(n, true);
        std::vector<double> x(n);
        std::vector<std::uint8_t> truth(n), hard(n);
        std::vector<double> block_sum(n);
        for (;;) {
            const std::uint64_t b = next_block.fetch_add(1);
            if (b >= nblocks) break;
            std::fill(block_sum.begin(), block_sum.end(), 0.0);
            const std::uint64_t first = b * kBlock;
            const std::uint64_t last = std::min(first + kBlock, samples);
            for (std::uint64_t s = first; s < last; ++s) {
                Rng rng(rng_seed + 0x9e3779b97f4a7c15ULL * (s + 1));
                // channel word enters the recursion bit-reversed (see ScScratch)
                for (std::uint32_t i = 0; i < n; ++i) {
                    truth[sc.rev[i]] = static_cast<std::uint8_t>(rng.bernoulli(src.p));
                    x[i] = prior;
                }
                genie_pass(sc, 0, x.data(), truth.data(), hard.data(), n, 0,
                           block_sum.data());
            }
            std::unique_lock<std::mutex> lock(merge_mtx);
            merge_cv.wait(lock, [&] { return merged == b; });
            for (std::uint32_t j = 0; j < n; ++j) ent_total[j] += block_sum[j];
            ++merged;
            merge_cv.notify_all();
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    PolarProfile prof;
    prof.n = n;
    prof.beta = beta;
    prof.p = src.p;
    prof.meta.samples = samples;
    prof.meta.rng_seed = rng_seed;
    prof.entropies.assign(n, 0.0);
    for (std::uint32_t j = 0; j < n; ++j)
        prof.entropies[j] = ent_total[j] / static_cast<double>(samples);

    const double delta = prof.delta_n();
    for (std::uint32_t j = 0; j < n; ++j) {
        if (prof.entropies[j] > 1.0 - delta) prof.high_set.push_back(j);
        else if (prof.entropies[j] < delta) prof.low_set.push_back(j);
        else prof.mid_set.push_back(j);
    }
    prof.validate();
    return prof;
}

BitVec source_encode(const BitVec& v, const BitVec& seed, const PolarProfile& prof) {
    if (v.size() != prof.n) throw UsageError("source_encode: message length mismatch");
    if (seed.size() != prof.d_j()) throw UsageError("source_encode: seed length mismatch");

    const BitVec a = polar_transform(v);
    BitVec out(prof.n_tilde());
    std::size_t k = 0;
    for (auto j : prof.high_set) out.set(k++, a.get(j));
    for (std::size_t i = 0; i < prof.mid_set.size(); ++i)
        out.set(k++, a.get(prof.mid_set[i]) ^ seed.get(i));
    opcount::add_bit_xor(prof.d_j());
    return out;
}

BitVec source_decode(const BitVec& msg, const BitVec& seed, const PolarProfile& prof,
                     const SourceModel& src) {
    if (msg.size() != prof.n_tilde()) throw UsageError("source_decode: message length mismatch");
    if (seed.size() != prof.d_j()) throw UsageError("source_decode: seed length mismatch");

    const std::uint32_t n = prof.n;
    std::vector<std::uint8_t> known(n, 2);
    std::size_t k = 0;
    for (auto j : prof.high_set) known[j] = static_cast<std::uint8_t>(msg.get(k++));
    for (std::size_t i = 0; i < prof.mid_set.size(); ++i)
        known[prof.mid_set[i]] = static_cast<std::uint8_t>(msg.get(k++) ^ seed.get(i));
    opcount::add_bit_xor(prof.d_j());

    ScScratch sc;
    sc.init(n, false);
    std::vector<double> x(n, 1.0 - 2.0 * src.p);
    std::vector<std::uint8_t> hard(n);
    decode_pass(sc, 0, x.data(), known.data(), hard.data(), n, 0);

    // root hard output is the bit-reversed channel word
    BitVec v(n);
    for (std::uint32_t i = 0; i < n; ++i) v.set(i, hard[sc.rev[i]]);
    return v;
}

// ---------------------------------------------------------------------------
// Profile file format "NUHPOLR1": little-endian
//   u32 n, f64 beta, f64 p, u64 samples, u64 rng_seed,
//   n x f64 entropies, then three u32-length-prefixed u32 index lists
//   (high, low, mid).

namespace {

template <typename T>
void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T take(std::ifstream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw FormatError("profile file: truncated");
    return v;
}

constexpr char kMagic[8] = {'N', 'U', 'H', 'P', 'O', 'L', 'R', '1'};

} // namespace

void save_profile(const PolarProfile& prof, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw FormatError("cannot open for writing: " + path);
    os.write(kMagic, sizeof(kMagic));
    put<std::uint32_t>(os, prof.n);
    put<double>(os, prof.beta);
    put<double>(os, prof.p);
    put<std::uint64_t>(os, prof.meta.samples);
    put<std::uint64_t>(os, prof.meta.rng_seed);
    for (double e : prof.entropies) put<double>(os, e);
    for (const auto* set : {&prof.high_set, &prof.low_set, &prof.mid_set}) {
        put<std::uint32_t>(os, static_cast<std::uint32_t>(set->size()));
        for (auto j : *set) put<std::uint32_t>(os, j);
    }
    if (!os) throw FormatError("profile file: write failed");
}

PolarProfile load_profile(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open: " + path);
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw FormatError("profile file: bad magic");
    PolarProfile prof;
    prof.n = take<std::uint32_t>(is);
    prof.beta = take<double>(is);
    prof.p = take<double>(is);
    prof.meta.samples = take<std::uint64_t>(is);
    prof.meta.rng_seed = take<std::uint64_t>(is);
    if (!is_pow2(prof.n)) throw FormatError("profile file: n is not a power of two");
    prof.entropies.resize(prof.n);
    for (auto& e : prof.entropies) e = take<double>(is);
    for (auto* set : {&prof.high_set, &prof.low_set, &prof.mid_set}) {
        const auto count = take<std::uint32_t>(is);
        if (count > prof.n) throw FormatError("profile file: oversized index list");
        set->resize(count);
        for (auto& j : *set) j = take<std::uint32_t>(is);
    }
    prof.validate();
    return prof;
}

} // namespace nuhuncc::polar
