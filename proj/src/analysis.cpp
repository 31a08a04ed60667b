#include "nuhuncc/analysis.hpp"
#include "nuhuncc/errors.hpp"
#include "nuhuncc/polar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace nuhuncc::analysis {

// ---------------------------------------------------------------------------
// Rates

double rate_it_eve(double hv_frac, double dj_frac) {
    if (hv_frac < 0 || hv_frac > 1 || dj_frac < 0 || dj_frac > 1)
        throw UsageError("rate: fractions must be in [0,1]");
    const double denom = hv_frac + 2.0 * dj_frac;
    if (denom <= 0) throw UsageError("rate: zero denominator");
    return 1.0 / denom;
}

double rate_crypto_eve(const RateInputs& in) {
    if (in.hv_frac < 0 || in.hv_frac > 1 || in.dj_frac < 0 || in.dj_frac > 1)
        throw UsageError("rate: fractions must be in [0,1]");
    if (in.ell == 0 || in.c == 0 || in.c >= in.ell + 1) // c <= ell
        throw UsageError("rate: need 1 <= c <= ell");
    if (in.r < 0) throw UsageError("rate: negative expansion");
    const double rl = in.r / in.ell;
    const double rc = in.r / in.c;
    const double denom = in.hv_frac * (1.0 + rl) + in.dj_frac * (2.0 + rl + rc);
    if (denom <= 0) throw UsageError("rate: zero denominator");
    return 1.0 / denom;
}

double table1_rate(Scheme s, const Table1Params& p) {
    switch (s) {
        case Scheme::Num:
            // optimal compression to H(V) bits per bit, then rate-eta encryption
            return p.eta / p.hv_frac;
        case Scheme::NcWtc2:
            // n (ell - w) / (|H_V| ell)
            return static_cast<double>(p.ell - p.w) / (p.hv_frac * p.ell);
        case Scheme::NuIs:
            return rate_it_eve(p.hv_frac, p.dj_frac);
        case Scheme::NuHuncc:
            return rate_crypto_eve({p.hv_frac, p.dj_frac, p.ell, p.c, p.r});
    }
    throw UsageError("unknown scheme");
}

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Num: return "NUM";
        case Scheme::NcWtc2: return "NC-WTC-II";
        case Scheme::NuIs: return "NU-IS";
        case Scheme::NuHuncc: return "NU-HUNCC";
    }
    return "?";
}

// ---------------------------------------------------------------------------

std::pair<double, double> seed_bounds(double n) {
    if (n < 1) throw UsageError("seed_bounds: n must be >= 1");
    return {std::pow(n, 0.7214), std::pow(n, 0.7331)};
}

// ---------------------------------------------------------------------------

ComplexityReport complexity_counts(const ComplexityParams& p) {
    if (p.n == 0 || (p.n & (p.n - 1)) != 0) throw UsageError("complexity: n must be a power of two");
    ComplexityReport r;
    const double logn = std::log2(static_cast<double>(p.n));
    r.polar_encode = 3.0 * p.n * logn / 2.0;
    r.polar_decode = p.n * logn / 2.0;
    r.seed_pad = 2.0 * std::pow(static_cast<double>(p.n), 0.7331);
    r.linear_code = p.n_tilde * p.ell * p.ell * (p.ell - 1.0);

    // code rate to two decimals: the convention that reproduces the
    // reference per-block figures exactly
    r.eta_used = std::round(100.0 * p.c_g / p.n_g) / 100.0;
    const double logng = std::log2(static_cast<double>(p.n_g));
    r.cipher_encrypt_block = r.eta_used * p.t * p.n_g * logng / 2.0;
    r.cipher_decrypt_block = (3.0 - 2.0 * r.eta_used) * p.t * p.n_g * logng;

    const double encrypted_bits = p.c * p.n_tilde + p.ell * p.d_j;
    r.cipher_blocks = std::ceil(encrypted_bits / p.c_g);
    r.total = p.ell * (r.polar_encode + r.polar_decode + r.seed_pad) + r.linear_code +
              r.cipher_blocks * (r.cipher_encrypt_block + r.cipher_decrypt_block);
    return r;
}

double all_encrypted_total_ops(const ComplexityParams& p, double hv_frac) {
    ComplexityReport r = complexity_counts(p);
    const double blocks_per_msg = std::ceil(hv_frac * p.n / p.c_g);
    return p.ell * (r.polar_encode + r.polar_decode +
                    blocks_per_msg * (r.cipher_encrypt_block + r.cipher_decrypt_block));
}

// ---------------------------------------------------------------------------

BoundsReport security_bounds(const BoundsParams& p) {
    if (p.n < 1 || p.beta < 0 || p.beta >= 0.5) throw UsageError("bounds: bad n or beta");
    BoundsReport r;
    const double nb = std::pow(p.n, p.beta);
    r.delta_n = std::exp2(-nb);
    r.eps_e_linear = p.ell * r.delta_n;
    const double pinsker = std::sqrt(2.0 * p.n_tilde * p.ell * r.delta_n);
    r.eps_s_linear = 2.0 * pinsker;
    r.eps_s_nonlinear = p.n_tilde * std::pow(p.ell, -p.t / 2.0) + r.eps_s_linear;
    r.eps_e_nonlinear = p.n_tilde * std::exp2(-p.ell) + pinsker + r.eps_e_linear;
    r.zeta_bound = std::sqrt(1.0 - std::pow(1.0 - r.delta_n, std::log(4.0))) / 2.0;
    r.advantage_bound = std::pow(2.0, 1.5) * std::exp2(-nb / 2.0) * p.mu * p.k_w;
    return r;
}

// ---------------------------------------------------------------------------
// Leakage

namespace {

// probability of a symbol value under i.i.d. Bernoulli(bit_p) bits;
// prime fields use the uniform law
double symbol_prob(const gf::Field& f, std::uint32_t v, double bit_p) {
    if (f.kind() == gf::FieldKind::Prime) return 1.0 / f.order();
    double pr = 1.0;
    for (unsigned b = 0; b < f.mu(); ++b) pr *= (v >> b & 1) ? bit_p : 1.0 - bit_p;
    return pr;
}

double pinsker_chain_bound(const gf::Field& f, unsigned ell, double bit_p) {
    // D(p_M || uniform) over one column, in bits
    double per_bit = 1.0;
    if (bit_p > 0.0 && bit_p < 1.0)
        per_bit = 1.0 + bit_p * std::log2(bit_p) + (1.0 - bit_p) * std::log2(1.0 - bit_p);
    const double bits = f.kind() == gf::FieldKind::Prime ? 0.0
                                                         : ell * static_cast<double>(f.mu());
    const double kl = bits * per_bit;
    return 2.0 * std::sqrt(2.0 * kl);
}

struct JointTable {
    // joint[(mks, z)] built over full enumeration or samples
    std::map<std::pair<std::uint64_t, std::uint64_t>, double> joint;
    std::map<std::uint64_t, double> p_mks, p_z;

    void add(std::uint64_t mks, std::uint64_t z, double pr) {
        joint[{mks, z}] += pr;
        p_mks[mks] += pr;
        p_z[z] += pr;
    }

    double mutual_information() const {
        double mi = 0.0;
        for (auto& [key, pj] : joint) {
            if (pj <= 0) continue;
            const double pm = p_mks.at(key.first);
            const double pz = p_z.at(key.second);
            mi += pj * std::log2(pj / (pm * pz));
        }
        return mi;
    }

    double max_variational_distance() const {
        double best = 0.0;
        for (auto& [mks, pm] : p_mks) {
            if (pm <= 0) continue;
            double v = 0.0;
            for (auto& [z, pz] : p_z) {
                auto it = joint.find({mks, z});
                const double cond = it == joint.end() ? 0.0 : it->second / pm;
                v += std::abs(cond - pz);
            }
            best = std::max(best, v);
        }
        return best;
    }
};

template <typename EncodeColumn>
LeakageReport leakage_enumerate(const gf::Field& f, unsigned ell, double bit_p,
                                const std::vector<unsigned>& observed,
                                const std::vector<unsigned>& protected_pos,
                                EncodeColumn&& encode) {
    const double order = f.order();
    const double states = std::pow(order, ell);
    if (states > double(1 << 24)) throw UsageError("leakage_exact: state space above 2^24");
    for (auto l : observed)
        if (l >= ell) throw UsageError("leakage: bad observed link");
    for (auto k : protected_pos)
        if (k >= ell) throw UsageError("leakage: bad protected index");

    JointTable table;
    std::vector<std::uint32_t> m(ell, 0);
    const auto total = static_cast<std::uint64_t>(states);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        double pr = 1.0;
        for (unsigned i = 0; i < ell; ++i) {
            m[i] = static_cast<std::uint32_t>(rest % f.order());
            rest /= f.order();
            pr *= symbol_prob(f, m[i], bit_p);
        }
        if (pr == 0.0) continue;
        const std::vector<std::uint32_t> x = encode(m);
        std::uint64_t mks = 0, z = 0;
        for (auto k : protected_pos) mks = mks * f.order() + m[k];
        for (auto l : observed) z = z * f.order() + x[l];
        table.add(mks, z, pr);
    }

    LeakageReport rep;
    rep.estimator = "exact-enumeration";
    rep.states = total;
    rep.mutual_information = table.mutual_information();
    rep.variational_distance = table.max_variational_distance();
    rep.bound = pinsker_chain_bound(f, ell, bit_p);
    return rep;
}

} // namespace

LeakageReport leakage_exact(const isc::LinearIsCode& code, double bit_p,
                            const std::vector<unsigned>& observed,
                            const std::vector<unsigned>& protected_pos) {
    const gf::Field& f = *code.field;
    return leakage_enumerate(
        f, code.ell, bit_p, observed, protected_pos,
        [&](const std::vector<std::uint32_t>& m) {
            // single column through G_IS^T
            std::vector<std::uint32_t> x(code.ell, 0);
            for (unsigned r = 0; r < code.ell; ++r) {
                std::uint32_t acc = 0;
                for (unsigned i = 0; i < code.ell; ++i)
                    acc = f.add(acc, f.mul(code.g_is.at(i, r), m[i]));
                x[r] = acc;
            }
            return x;
        });
}

LeakageReport leakage_exact(const isc::NonlinearIsCode& code, double bit_p,
                            const std::vector<unsigned>& observed,
                            const std::vector<unsigned>& protected_pos) {
    auto f2 = gf::Field::binary(1);
    return leakage_enumerate(
        *f2, code.ell(), bit_p, observed, protected_pos,
        [&](const std::vector<std::uint32_t>& m) {
            BitVec col(code.ell());
            for (unsigned i = 0; i < code.ell(); ++i) col.set(i, static_cast<int>(m[i]));
            const BitVec x = code.encode(col);
            std::vector<std::uint32_t> out(code.ell());
            for (unsigned i = 0; i < code.ell(); ++i) out[i] = static_cast<std::uint32_t>(x.get(i));
            return out;
        });
}

LeakageReport leakage_monte_carlo(const isc::LinearIsCode& code, double bit_p,
                                  const std::vector<unsigned>& observed,
                                  const std::vector<unsigned>& protected_pos,
                                  std::uint64_t samples, std::uint64_t rng_seed) {
    const gf::Field& f = *code.field;
    Rng rng(rng_seed);
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> joint;
    std::map<std::uint64_t, std::uint64_t> cm, cz;
    std::vector<std::uint32_t> m(code.ell);
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (unsigned i = 0; i < code.ell; ++i) {
            if (f.kind() == gf::FieldKind::Prime) {
                m[i] = static_cast<std::uint32_t>(rng.below(f.order()));
            } else {
                std::uint32_t v = 0;
                for (unsigned b = 0; b < f.mu(); ++b)
                    v |= static_cast<std::uint32_t>(rng.bernoulli(bit_p)) << b;
                m[i] = v;
            }
        }
        std::uint64_t mks = 0, z = 0;
        for (auto k : protected_pos) mks = mks * f.order() + m[k];
        for (auto l : observed) {
            std::uint32_t acc = 0;
            for (unsigned i = 0; i < code.ell; ++i)
                acc = f.add(acc, f.mul(code.g_is.at(i, l), m[i]));
            z = z * f.order() + acc;
        }
        joint[{mks, z}]++;
        cm[mks]++;
        cz[z]++;
    }

    // plug-in MI with Miller-Madow correction per entropy term
    auto ent = [&](auto& counts) {
        std::map<std::uint64_t, std::uint64_t> c;
        for (auto& [k, v] : counts) c[k] = v;
        return estimate_entropy(c);
    };
    std::map<std::uint64_t, std::uint64_t> cj;
    std::uint64_t idx = 0;
    double mi_plug = 0.0, var_term = 0.0;
    for (auto& [key, cnt] : joint) {
        cj[idx++] = cnt;
        (void)key;
    }
    const auto hm = ent(cm), hz = ent(cz), hj = estimate_entropy(cj);
    mi_plug = hm.miller_madow + hz.miller_madow - hj.miller_madow;
    // delta-method standard error of the plug-in MI
    const double n = static_cast<double>(samples);
    for (auto& [key, cnt] : joint) {
        const double pj = cnt / n;
        const double pm = cm[key.first] / n;
        const double pz = cz[key.second] / n;
        const double g = std::log2(pj / (pm * pz));
        var_term += pj * g * g;
    }
    double mi_point = 0.0;
    for (auto& [key, cnt] : joint) {
        const double pj = cnt / n;
        mi_point += pj * std::log2(pj / ((cm[key.first] / n) * (cz[key.second] / n)));
    }
    var_term -= mi_point * mi_point;

    LeakageReport rep;
    rep.estimator = "monte-carlo";
    rep.states = samples;
    rep.mutual_information = std::max(0.0, mi_plug);
    rep.std_error = std::sqrt(std::max(0.0, var_term) / n);
    // empirical max variational distance
    double best = 0.0;
    for (auto& [mks, cmv] : cm) {
        double v = 0.0;
        for (auto& [z, czv] : cz) {
            auto it = joint.find({mks, z});
            const double cond = it == joint.end() ? 0.0 : static_cast<double>(it->second) / cmv;
            v += std::abs(cond - czv / n);
        }
        best = std::max(best, v);
    }
    rep.variational_distance = best;
    rep.bound = pinsker_chain_bound(f, code.ell, bit_p);
    return rep;
}

// ---------------------------------------------------------------------------

std::map<std::uint64_t, std::uint64_t> coset_counts(
    const isc::LinearIsCode& code, const std::vector<unsigned>& observed,
    const std::vector<std::uint32_t>& observed_symbols) {
    const gf::Field& f = *code.field;
    if (observed.size() != observed_symbols.size())
        throw UsageError("coset_counts: observation shape mismatch");
    const double states = std::pow(static_cast<double>(f.order()), code.ell);
    if (states > double(1 << 24)) throw UsageError("coset_counts: enumeration infeasible");

    std::map<std::uint64_t, std::uint64_t> counts;
    // every coset key present even if empty
    std::uint64_t ncosets = 1;
    for (unsigned i = 0; i < code.ks; ++i) ncosets *= f.order();
    for (std::uint64_t k = 0; k < ncosets; ++k) counts[k] = 0;

    std::vector<std::uint32_t> m(code.ell, 0);
    const auto total = static_cast<std::uint64_t>(states);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (unsigned i = 0; i < code.ell; ++i) {
            m[i] = static_cast<std::uint32_t>(rest % f.order());
            rest /= f.order();
        }
        bool consistent = true;
        for (std::size_t oi = 0; oi < observed.size() && consistent; ++oi) {
            std::uint32_t acc = 0;
            for (unsigned i = 0; i < code.ell; ++i)
                acc = f.add(acc, f.mul(code.g_is.at(i, observed[oi]), m[i]));
            consistent = acc == observed_symbols[oi];
        }
        if (!consistent) continue;
        std::uint64_t mks = 0;
        for (unsigned k = 0; k < code.ks; ++k) mks = mks * f.order() + m[k];
        counts[mks]++;
    }
    return counts;
}

std::uint64_t coset_count_check(const isc::LinearIsCode& code, unsigned w) {
    const gf::Field& f = *code.field;
    if (w + code.ks > code.ell) throw UsageError("coset_count_check: w too large");
    const double expect_d = std::pow(static_cast<double>(f.order()),
                                     static_cast<double>(code.ell - w - code.ks));
    const auto expected = static_cast<std::uint64_t>(std::llround(expect_d));

    // all w-subsets of links, all symbol assignments
    std::vector<unsigned> links(code.ell);
    for (unsigned i = 0; i < code.ell; ++i) links[i] = i;
    std::vector<unsigned> subset(w);
    std::vector<bool> select(code.ell, false);
    std::fill(select.begin(), select.begin() + w, true);
    do {
        unsigned si = 0;
        for (unsigned i = 0; i < code.ell; ++i)
            if (select[i]) subset[si++] = i;
        std::uint64_t assignments = 1;
        for (unsigned i = 0; i < w; ++i) assignments *= f.order();
        for (std::uint64_t a = 0; a < assignments; ++a) {
            std::vector<std::uint32_t> symbols(w);
            std::uint64_t rest = a;
            for (unsigned i = 0; i < w; ++i) {
                symbols[i] = static_cast<std::uint32_t>(rest % f.order());
                rest /= f.order();
            }
            auto counts = coset_counts(code, subset, symbols);
            for (auto& [coset, cnt] : counts) {
                if (cnt != expected)
                    throw CryptoError("coset counts unequal: got " + std::to_string(cnt) +
                                      " expected " + std::to_string(expected));
            }
        }
    } while (std::prev_permutation(select.begin(), select.end()));
    return expected;
}

// ---------------------------------------------------------------------------
// Distinguishing game

GameReport distinguish_game(const GameConfig& cfg, std::uint64_t trials,
                            std::uint64_t rng_seed) {
    if (cfg.ks < 1 || cfg.ks >= cfg.ell) throw UsageError("game: need 1 <= ks < ell");
    if (cfg.i_star >= cfg.ks) throw UsageError("game: i_star must index a protected symbol");
    auto field = gf::Field::binary(cfg.mu);
    if (cfg.cand0 == cfg.cand1 || cfg.cand0 >= field->order() || cfg.cand1 >= field->order())
        throw UsageError("game: candidates must be distinct field elements");
    const auto code = isc::LinearIsCode::build(field, cfg.ell, cfg.ks, cfg.code_seed);
    const gf::Field& f = *field;
    const unsigned kw = cfg.ell - cfg.ks;

    GameReport rep;
    rep.trials = trials;
    rep.degenerate = kw == 0;

    const double pmax_bit = std::max(cfg.bit_p, 1.0 - cfg.bit_p);
    const double pmin_bit = std::min(cfg.bit_p, 1.0 - cfg.bit_p);
    const double p_max = std::pow(pmax_bit, static_cast<double>(cfg.mu) * kw);
    const double p_min = std::pow(pmin_bit, static_cast<double>(cfg.mu) * kw);
    rep.closed_form = (p_max + p_min) > 0 ? p_max / (p_max + p_min) - 0.5 : 0.0;

    // observed links: the unencrypted ones (positions ks..ell-1 of x)
    std::vector<unsigned> obs(kw);
    for (unsigned i = 0; i < kw; ++i) obs[i] = cfg.ks + i;

    auto encode_col = [&](const std::vector<std::uint32_t>& m, unsigned link) {
        std::uint32_t acc = 0;
        for (unsigned i = 0; i < cfg.ell; ++i)
            acc = f.add(acc, f.mul(code.g_is.at(i, link), m[i]));
        return acc;
    };
    auto draw_symbol = [&](Rng& rng) {
        std::uint32_t v = 0;
        for (unsigned b = 0; b < cfg.mu; ++b)
            v |= static_cast<std::uint32_t>(rng.bernoulli(cfg.bit_p)) << b;
        return v;
    };
    auto symbol_pr = [&](std::uint32_t v) { return symbol_prob(f, v, cfg.bit_p); };

    Rng rng(rng_seed);
    std::vector<std::uint32_t> m(cfg.ell), probe(cfg.ell);
    const std::uint64_t kw_states = std::uint64_t{1} << (static_cast<std::uint64_t>(cfg.mu) * kw);
    for (std::uint64_t t = 0; t < trials; ++t) {
        // challenger samples the hidden data
        const int h = static_cast<int>(rng.below(2));
        for (unsigned k = 0; k < cfg.ks; ++k) m[k] = draw_symbol(rng);
        m[cfg.i_star] = h == 0 ? cfg.cand0 : cfg.cand1;
        for (unsigned i = cfg.ks; i < cfg.ell; ++i) m[i] = draw_symbol(rng);
        std::vector<std::uint32_t> z(kw);
        for (unsigned i = 0; i < kw; ++i) z[i] = encode_col(m, obs[i]);

        // adversary: likelihood of the observation under each candidate,
        // marginalizing the unknown k_w symbols over the source law
        double like[2] = {0.0, 0.0};
        for (int hyp = 0; hyp < 2; ++hyp) {
            probe = m; // adversary knows the protected symbols besides i_star
            probe[cfg.i_star] = hyp == 0 ? cfg.cand0 : cfg.cand1;
            for (std::uint64_t e = 0; e < kw_states; ++e) {
                std::uint64_t rest = e;
                double pr = 1.0;
                for (unsigned i = 0; i < kw; ++i) {
                    probe[cfg.ks + i] = static_cast<std::uint32_t>(rest & (f.order() - 1));
                    rest >>= cfg.mu;
                    pr *= symbol_pr(probe[cfg.ks + i]);
                }
                if (pr == 0.0) continue;
                bool match = true;
                for (unsigned i = 0; i < kw && match; ++i)
                    match = encode_col(probe, obs[i]) == z[i];
                if (match) like[hyp] += pr;
            }
        }
        int guess;
        if (like[0] == like[1]) guess = static_cast<int>(rng.below(2));
        else guess = like[1] > like[0] ? 1 : 0;
        if (guess == h) ++rep.wins;
    }
    rep.advantage = std::abs(static_cast<double>(rep.wins) / trials - 0.5);
    return rep;
}

// ---------------------------------------------------------------------------

EntropyEstimate estimate_entropy(const std::map<std::uint64_t, std::uint64_t>& counts) {
    EntropyEstimate e;
    for (auto& [_, c] : counts) e.samples += c;
    if (e.samples == 0) return e;
    const double n = static_cast<double>(e.samples);
    double h = 0.0, second = 0.0;
    for (auto& [_, c] : counts) {
        if (c == 0) continue;
        ++e.distinct;
        const double p = c / n;
        h -= p * std::log2(p);
        second += p * std::log2(p) * std::log2(p);
    }
    e.plug_in = h;
    e.miller_madow = h + (static_cast<double>(e.distinct) - 1.0) / (2.0 * n * std::log(2.0));
    e.std_error = std::sqrt(std::max(0.0, second - h * h) / n);
    return e;
}

// ---------------------------------------------------------------------------
// CSV emitters

double SweepParams::dj_model(double n) const {
    auto [lo, hi] = seed_bounds(n);
    return std::sqrt(lo * hi);
}

namespace {

std::ofstream open_csv(const std::string& path) {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw FormatError("cannot open for writing: " + path);
    return os;
}

Table1Params sweep_point(const SweepParams& sp, double n) {
    Table1Params p;
    p.hv_frac = sp.entropy;
    p.dj_frac = sp.dj_model(n) / n;
    p.ell = sp.ell;
    p.w = sp.ell - sp.c;
    p.c = sp.c;
    p.eta = static_cast<double>(sp.c_g) / sp.n_g;
    p.r = sp.r_link_units();
    return p;
}

} // namespace

void write_fig2_seed_csv(const std::string& path,
                         const std::vector<std::pair<std::uint32_t, std::uint32_t>>& measured) {
    auto os = open_csv(path);
    os << "# seed size vs message size: n_bits,lower_bound,upper_bound,model";
    if (!measured.empty()) os << ",measured_d_j";
    os << "\n";
    std::size_t mi = 0;
    for (unsigned logn = 10; logn <= 20; ++logn) {
        const double n = std::exp2(logn);
        auto [lo, hi] = seed_bounds(n);
        char buf[160];
        std::snprintf(buf, sizeof buf, "%.0f,%.2f,%.2f,%.2f", n, lo, hi, std::sqrt(lo * hi));
        os << buf;
        if (mi < measured.size() && measured[mi].first == (1u << logn)) {
            os << "," << measured[mi].second;
            ++mi;
        }
        os << "\n";
    }
}

void write_fig3_rate_vs_size_csv(const std::string& path, const SweepParams& sp) {
    auto os = open_csv(path);
    os << "# rate vs message size at ell=" << sp.ell << " c=" << sp.c
       << " H=" << sp.entropy << ": n_bits,num,nc_wtc2,nu_is,nu_huncc\n";
    for (unsigned logn = 8; logn <= 21; ++logn) {
        const double n = std::exp2(logn);
        const auto p = sweep_point(sp, n);
        char buf[200];
        std::snprintf(buf, sizeof buf, "%.0f,%.6f,%.6f,%.6f,%.6f\n", n,
                      table1_rate(Scheme::Num, p), table1_rate(Scheme::NcWtc2, p),
                      table1_rate(Scheme::NuIs, p), table1_rate(Scheme::NuHuncc, p));
        os << buf;
    }
}

void write_fig4_rate_vs_links_csv(const std::string& path, const SweepParams& sp) {
    auto os = open_csv(path);
    const double n = std::exp2(20);
    os << "# rate vs links at n=2^20 c=" << sp.c << " H=" << sp.entropy
       << ": ell,num,nc_wtc2,nu_is,nu_huncc\n";
    for (unsigned ell = 4; ell <= 10; ++ell) {
        SweepParams s = sp;
        s.ell = ell;
        const auto p = sweep_point(s, n);
        char buf[200];
        std::snprintf(buf, sizeof buf, "%u,%.6f,%.6f,%.6f,%.6f\n", ell,
                      table1_rate(Scheme::Num, p), table1_rate(Scheme::NcWtc2, p),
                      table1_rate(Scheme::NuIs, p), table1_rate(Scheme::NuHuncc, p));
        os << buf;
    }
}

void write_fig5_rate_vs_entropy_csv(const std::string& path, const SweepParams& sp) {
    auto os = open_csv(path);
    const double n = std::exp2(20);
    os << "# rate vs source entropy at n=2^20 ell=" << sp.ell << " c=" << sp.c
       << ": entropy,num,nc_wtc2,nu_is,nu_huncc\n";
    for (int e = 70; e <= 95; ++e) {
        SweepParams s = sp;
        s.entropy = e / 100.0;
        const auto p = sweep_point(s, n);
        char buf[200];
        std::snprintf(buf, sizeof buf, "%.2f,%.6f,%.6f,%.6f,%.6f\n", s.entropy,
                      table1_rate(Scheme::Num, p), table1_rate(Scheme::NcWtc2, p),
                      table1_rate(Scheme::NuIs, p), table1_rate(Scheme::NuHuncc, p));
        os << buf;
    }
}

void write_fig6_ops_vs_links_csv(const std::string& path, const SweepParams& sp) {
    auto os = open_csv(path);
    const std::uint32_t n = 1u << 20;
    os << "# binary operations vs links at n=2^20 H=" << sp.entropy << " c=" << sp.c
       << ": ell,all_encrypted,nu_huncc\n";
    for (unsigned ell = 4; ell <= 10; ++ell) {
        ComplexityParams cp;
        cp.n = n;
        const double dj = sp.dj_model(n);
        cp.n_tilde = sp.entropy * n + dj;
        cp.d_j = dj;
        cp.ell = ell;
        cp.c = sp.c;
        cp.n_g = sp.n_g;
        cp.c_g = sp.c_g;
        cp.t = sp.t;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%u,%.0f,%.0f\n", ell,
                      all_encrypted_total_ops(cp, sp.entropy), complexity_counts(cp).total);
        os << buf;
    }
}

} // namespace nuhuncc::analysis
