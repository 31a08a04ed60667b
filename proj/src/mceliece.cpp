#include "nuhuncc/mceliece.hpp"
#include "nuhuncc/errors.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

namespace nuhuncc::mce {

namespace {

// --------------------------------------------------------------------------
// Polynomials over GF(2^d): ascending coefficients, no trailing zeros.

using Poly = std::vector<std::uint32_t>;
using F = gf::Field;

void p_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int p_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly p_add(const F& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t v = 0;
        if (i < a.size()) v = f.add(v, a[i]);
        if (i < b.size()) v = f.add(v, b[i]);
        r[i] = v;
    }
    p_trim(r);
    return r;
}

Poly p_mul(const F& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    p_trim(r);
    return r;
}

// quotient and remainder of a by b
std::pair<Poly, Poly> p_divmod(const F& f, Poly a, const Poly& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    const int db = p_deg(b);
    const std::uint32_t lead_inv = f.inv(b.back());
    Poly q;
    while (p_deg(a) >= db) {
        const int shift = p_deg(a) - db;
        const std::uint32_t c = f.mul(a.back(), lead_inv);
        if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, 0);
        q[shift] = f.add(q[shift], c);
        for (int i = 0; i <= db; ++i)
            a[i + shift] = f.sub(a[i + shift], f.mul(c, b[i]));
        p_trim(a);
    }
    p_trim(q);
    return {q, a};
}

Poly p_rem(const F& f, Poly a, const Poly& b) { return p_divmod(f, std::move(a), b).second; }

Poly p_mulmod(const F& f, const Poly& a, const Poly& b, const Poly& g) {
    return p_rem(f, p_mul(f, a, b), g);
}

Poly p_monic(const F& f, Poly a) {
    if (a.empty()) return a;
    const std::uint32_t inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
    return a;
}

Poly p_gcd(const F& f, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = p_rem(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return p_monic(f, std::move(a));
}

// inverse of a modulo g (g irreducible, a nonzero mod g)
Poly p_invmod(const F& f, const Poly& a, const Poly& g) {
    Poly r0 = g, r1 = p_rem(f, a, g);
    Poly t0, t1 = {1};
    if (r1.empty()) throw CryptoError("polynomial inverse of zero");
    while (!r1.empty()) {
        auto [q, r2] = p_divmod(f, r0, r1);
        Poly t2 = p_add(f, t0, p_mul(f, q, t1)); // char 2: subtraction = addition
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (p_deg(r0) != 0) throw CryptoError("polynomial inverse does not exist");
    const std::uint32_t c = f.inv(r0[0]);
    for (auto& v : t0) v = f.mul(v, c);
    p_trim(t0);
    return t0;
}

std::uint32_t p_eval(const F& f, const Poly& a, std::uint32_t x) {
    std::uint32_t acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

// a^(2^d) mod g: d squarings
Poly p_frob(const F& f, Poly a, const Poly& g, unsigned d) {
    for (unsigned i = 0; i < d; ++i) a = p_mulmod(f, a, a, g);
    return a;
}

// irreducible over GF(2^d) iff gcd(z^(q^i) - z, g) = 1 for i <= t/2
bool is_irreducible(const F& f, const Poly& g, unsigned d) {
    const int t = p_deg(g);
    if (t <= 0) return false;
    if (t == 1) return true;
    Poly h = {0, 1}; // z
    for (int i = 1; i <= t / 2; ++i) {
        h = p_frob(f, h, g, d);
        // gcd(z^(q^i) - z, g) must be constant; a zero difference means g
        // splits entirely into factors of degree <= i
        const Poly diff = p_add(f, h, Poly{0, 1});
        if (p_deg(p_gcd(f, g, diff)) > 0) return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// Packed GF(2) linear algebra on BitVec rows.

// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> rref_bits(std::vector<BitVec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t sel = row;
        while (sel < rows.size() && !rows[sel].get(col)) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != row && rows[r].get(col)) {
                auto& dst = rows[r].words();
                const auto& src = rows[row].words();
                for (std::size_t wi = 0; wi < dst.size(); ++wi) dst[wi] ^= src[wi];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// v (length = m.rows()) times m, i.e. the xor of selected rows
BitVec vec_times_mat(const BitVec& v, const BitMatrix& m) {
    BitVec out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!v.get(i)) continue;
        auto& dst = out.words();
        const auto& src = m.row(i).words();
        for (std::size_t wi = 0; wi < dst.size(); ++wi) dst[wi] ^= src[wi];
    }
    return out;
}

BitMatrix mat_times_mat(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) out.row(i) = vec_times_mat(a.row(i), b);
    return out;
}

std::size_t rank_bits(const BitMatrix& m) {
    std::vector<BitVec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rref_bits(rows, m.cols()).size();
}

BitMatrix invert_bits(const BitMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<BitVec> aug(n, BitVec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i].set(j, a.get(i, j));
        aug[i].set(n + i, 1);
    }
    auto pivots = rref_bits(aug, n);
    if (pivots.size() != n) throw CryptoError("binary matrix not invertible");
    BitMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, aug[i].get(n + j));
    return inv;
}

std::uint32_t field_sqrt(const F& f, std::uint32_t c, unsigned d) {
    for (unsigned i = 0; i + 1 < d; ++i) c = f.mul(c, c);
    return c;
}

} // namespace

void GoppaParams::validate() const {
    if (d < 2 || d > 16) throw UsageError("goppa: extension degree must be in 2..16");
    if (n_g < 2 || n_g > (1u << d)) throw UsageError("goppa: code length exceeds field size");
    if (static_cast<std::uint64_t>(d) * t >= n_g)
        throw UsageError("goppa: d*t must be below the code length");
}

KeyPair keygen(const GoppaParams& params, std::uint64_t rng_seed) {
    params.validate();
    auto field = gf::Field::binary(params.d);
    const F& f = *field;
    Rng rng(rng_seed);

    // irreducible goppa polynomial by rejection, bounded attempts
    Poly g;
    if (params.t == 0) {
        g = {1};
    } else {
        bool found = false;
        for (int attempt = 0; attempt < 200 && !found; ++attempt) {
            g.assign(params.t + 1, 0);
            g[params.t] = 1;
            for (unsigned i = 0; i < params.t; ++i)
                g[i] = static_cast<std::uint32_t>(rng.below(f.order()));
            found = is_irreducible(f, g, params.d);
        }
        if (!found) throw CryptoError("goppa: no irreducible polynomial found in 200 attempts");
    }

    // support: distinct non-roots, order fixed by a seeded shuffle
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t e = 0; e < f.order(); ++e)
        if (p_eval(f, g, e) != 0) candidates.push_back(e);
    if (candidates.size() < params.n_g)
        throw CryptoError("goppa: not enough support elements");
    for (std::size_t i = candidates.size(); i > 1; --i)
        std::swap(candidates[i - 1], candidates[rng.below(i)]);
    std::vector<std::uint32_t> support(candidates.begin(), candidates.begin() + params.n_g);

    // parity over the extension field: H[i][j] = L_j^i / g(L_j), expanded to bits
    std::vector<BitVec> parity(params.d * params.t, BitVec(params.n_g));
    for (unsigned j = 0; j < params.n_g; ++j) {
        const std::uint32_t ginv = f.inv(p_eval(f, g, support[j]));
        std::uint32_t powl = 1;
        for (unsigned i = 0; i < params.t; ++i) {
            const std::uint32_t entry = f.mul(powl, ginv);
            for (unsigned bit = 0; bit < params.d; ++bit)
                if (entry >> bit & 1) parity[i * params.d + bit].set(j, 1);
            powl = f.mul(powl, support[j]);
        }
    }
    auto pivots = rref_bits(parity, params.n_g);
    const auto c_g = static_cast<unsigned>(params.n_g - pivots.size());

    // systematic generator from the reduced parity: identity on free columns
    std::vector<bool> is_pivot(params.n_g, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::uint32_t> info_cols;
    for (std::uint32_t c = 0; c < params.n_g; ++c)
        if (!is_pivot[c]) info_cols.push_back(c);
    BitMatrix g_goppa(c_g, params.n_g);
    for (unsigned r = 0; r < c_g; ++r) {
        const std::uint32_t fc = info_cols[r];
        g_goppa.set(r, fc, 1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            if (parity[pr].get(fc)) g_goppa.set(r, pivots[pr], 1);
    }

    // random dense nonsingular scrambler
    BitMatrix s(c_g, c_g);
    for (;;) {
        for (unsigned i = 0; i < c_g; ++i) s.row(i) = rng.bits(c_g);
        if (rank_bits(s) == c_g) break;
    }
    BitMatrix s_inv = invert_bits(s);

    // column permutation
    std::vector<std::uint32_t> perm(params.n_g);
    for (std::uint32_t i = 0; i < params.n_g; ++i) perm[i] = i;
    for (std::size_t i = perm.size(); i > 1; --i)
        std::swap(perm[i - 1], perm[rng.below(i)]);

    const BitMatrix sg = mat_times_mat(s, g_goppa);
    BitMatrix g_pub(c_g, params.n_g);
    for (unsigned i = 0; i < c_g; ++i)
        for (unsigned j = 0; j < params.n_g; ++j) g_pub.set(i, j, sg.get(i, perm[j]));

    SecretKey sec;
    sec.params = params;
    sec.c_g = c_g;
    sec.field = field;
    sec.goppa = g;
    sec.support = std::move(support);
    sec.perm = std::move(perm);
    sec.scrambler = std::move(s);
    sec.scrambler_inv = std::move(s_inv);
    sec.g_goppa = std::move(g_goppa);
    sec.info_cols = std::move(info_cols);

    if (params.t > 0) {
        sec.inv_lin.resize(params.n_g);
        for (unsigned i = 0; i < params.n_g; ++i)
            sec.inv_lin[i] = p_invmod(f, Poly{sec.support[i], 1}, g);
        // sqrt(z) mod g = z^(2^(d*t - 1))
        Poly h = {0, 1};
        const std::uint64_t squarings = static_cast<std::uint64_t>(params.d) * params.t - 1;
        for (std::uint64_t i = 0; i < squarings; ++i) h = p_mulmod(f, h, h, g);
        sec.sqrt_z = h;
    }

    PublicKey pub;
    pub.params = params;
    pub.c_g = c_g;
    pub.g_pub = std::move(g_pub);
    return {std::move(pub), std::move(sec)};
}

BitVec encrypt(const PublicKey& pub, const BitVec& m, Rng& rng) {
    if (m.size() != pub.c_g) throw UsageError("mceliece encrypt: message must be c_g bits");
    BitVec y = vec_times_mat(m, pub.g_pub);
    // uniform weight-t error
    std::vector<std::uint32_t> pos;
    while (pos.size() < pub.params.t) {
        const auto p = static_cast<std::uint32_t>(rng.below(pub.params.n_g));
        if (std::find(pos.begin(), pos.end(), p) == pos.end()) pos.push_back(p);
    }
    for (auto p : pos) y.flip(p);
    return y;
}

BitVec decrypt(const SecretKey& sec, const BitVec& kappa) {
    const unsigned n = sec.params.n_g;
    const unsigned t = sec.params.t;
    if (kappa.size() != n) throw CryptoError("mceliece decrypt: ciphertext must be n_g bits");
    const F& f = *sec.field;

    // undo the permutation
    BitVec y(n);
    for (unsigned j = 0; j < n; ++j)
        if (kappa.get(j)) y.set(sec.perm[j], 1);

    BitVec codeword = y;
    if (t > 0) {
        Poly syndrome;
        for (unsigned i = 0; i < n; ++i)
            if (y.get(i)) syndrome = p_add(f, syndrome, sec.inv_lin[i]);

        if (!syndrome.empty()) {
            // Patterson: sigma(z) = a^2 + z b^2 with b*sqrt(T + z) = a mod g
            const Poly tpoly = p_invmod(f, syndrome, sec.goppa);
            const Poly u = p_add(f, tpoly, Poly{0, 1});
            Poly sigma;
            if (u.empty()) {
                sigma = {0, 1};
            } else {
                // sqrt via even/odd split
                Poly even, odd;
                for (std::size_t i = 0; i < u.size(); ++i) {
                    const std::uint32_t root = field_sqrt(f, u[i], sec.params.d);
                    if (i % 2 == 0) {
                        even.resize(std::max(even.size(), i / 2 + 1), 0);
                        even[i / 2] = root;
                    } else {
                        odd.resize(std::max(odd.size(), i / 2 + 1), 0);
                        odd[i / 2] = root;
                    }
                }
                p_trim(even);
                p_trim(odd);
                const Poly r = p_add(f, even, p_mulmod(f, sec.sqrt_z, odd, sec.goppa));

                // partial extended Euclid: stop when deg(a) <= t/2
                Poly r0 = sec.goppa, r1 = r;
                Poly v0, v1 = {1};
                while (p_deg(r1) > static_cast<int>(t / 2)) {
                    auto [q, r2] = p_divmod(f, r0, r1);
                    Poly v2 = p_add(f, v0, p_mul(f, q, v1));
                    r0 = std::move(r1);
                    r1 = std::move(r2);
                    v0 = std::move(v1);
                    v1 = std::move(v2);
                }
                const Poly& a = r1;
                const Poly& b = v1;
                if (p_deg(b) > static_cast<int>((t - 1) / 2))
                    throw CryptoError("mceliece decrypt: error locator degree overflow");
                const Poly a2 = p_mul(f, a, a);
                const Poly b2 = p_mul(f, b, b);
                Poly zb2(b2.size() + 1, 0);
                for (std::size_t i = 0; i < b2.size(); ++i) zb2[i + 1] = b2[i];
                sigma = p_add(f, a2, zb2);
            }
            if (sigma.empty()) throw CryptoError("mceliece decrypt: empty error locator");

            // roots over the support give the error positions
            unsigned flips = 0;
            for (unsigned i = 0; i < n; ++i) {
                if (p_eval(f, sigma, sec.support[i]) == 0) {
                    codeword.flip(i);
                    ++flips;
                }
            }
            if (flips != static_cast<unsigned>(p_deg(sigma)) || flips > t)
                throw CryptoError("mceliece decrypt: error locator root count mismatch");
        }
    }

    // read the information set and re-check the full codeword
    BitVec ms(sec.c_g);
    for (unsigned i = 0; i < sec.c_g; ++i) ms.set(i, codeword.get(sec.info_cols[i]));
    if (vec_times_mat(ms, sec.g_goppa) != codeword)
        throw CryptoError("mceliece decrypt: corrected word is not a codeword");
    return vec_times_mat(ms, sec.scrambler_inv);
}

unsigned code_min_distance(const SecretKey& sec) {
    if (sec.c_g > 20) throw UsageError("min distance enumeration infeasible");
    unsigned best = sec.params.n_g;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << sec.c_g); ++m) {
        BitVec v(sec.c_g);
        for (unsigned i = 0; i < sec.c_g; ++i) v.set(i, (m >> i) & 1);
        const auto wt = static_cast<unsigned>(vec_times_mat(v, sec.g_goppa).popcount());
        best = std::min(best, wt);
    }
    return best;
}

BitVec McElieceCipher::decrypt_block(const BitVec& c) const {
    if (enc_only_) throw CryptoError("mceliece: no secret key loaded");
    return decrypt(kp_.sec, c);
}

// ---------------------------------------------------------------------------
// Key files

namespace {

constexpr char kMagic[8] = {'N', 'U', 'H', 'M', 'C', 'E', '1', 0};

template <typename T>
void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T take(std::ifstream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw FormatError("key file: truncated");
    return v;
}

void put_bits(std::ofstream& os, const BitVec& v) {
    const auto bytes = v.to_bytes();
    os.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
}

BitVec take_bits(std::ifstream& is, std::size_t nbits) {
    std::vector<std::uint8_t> bytes((nbits + 7) / 8);
    is.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!is) throw FormatError("key file: truncated");
    return BitVec::from_bytes(bytes, nbits);
}

void put_header(std::ofstream& os, std::uint8_t kind, const GoppaParams& p, unsigned c_g) {
    os.write(kMagic, sizeof(kMagic));
    put<std::uint8_t>(os, kind);
    put<std::uint32_t>(os, p.d);
    put<std::uint32_t>(os, p.n_g);
    put<std::uint32_t>(os, p.t);
    put<std::uint32_t>(os, c_g);
}

std::pair<GoppaParams, unsigned> take_header(std::ifstream& is, std::uint8_t kind) {
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw FormatError("key file: bad magic");
    if (take<std::uint8_t>(is) != kind) throw FormatError("key file: wrong key kind");
    GoppaParams p;
    p.d = take<std::uint32_t>(is);
    p.n_g = take<std::uint32_t>(is);
    p.t = take<std::uint32_t>(is);
    const auto c_g = take<std::uint32_t>(is);
    if (c_g == 0 || c_g > p.n_g) throw FormatError("key file: bad dimension");
    return {p, c_g};
}

} // namespace

void save_public_key(const PublicKey& pub, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw FormatError("cannot open for writing: " + path);
    put_header(os, 0, pub.params, pub.c_g);
    for (std::size_t i = 0; i < pub.g_pub.rows(); ++i) put_bits(os, pub.g_pub.row(i));
    if (!os) throw FormatError("key file: write failed");
}

PublicKey load_public_key(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open: " + path);
    auto [params, c_g] = take_header(is, 0);
    params.validate();
    PublicKey pub;
    pub.params = params;
    pub.c_g = c_g;
    pub.g_pub = BitMatrix(c_g, params.n_g);
    for (unsigned i = 0; i < c_g; ++i) pub.g_pub.row(i) = take_bits(is, params.n_g);
    return pub;
}

void save_secret_key(const SecretKey& sec, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw FormatError("cannot open for writing: " + path);
    put_header(os, 1, sec.params, sec.c_g);
    for (unsigned i = 0; i <= sec.params.t; ++i)
        put<std::uint32_t>(os, i < sec.goppa.size() ? sec.goppa[i] : 0);
    for (auto v : sec.support) put<std::uint32_t>(os, v);
    for (auto v : sec.perm) put<std::uint32_t>(os, v);
    for (std::size_t i = 0; i < sec.scrambler.rows(); ++i) put_bits(os, sec.scrambler.row(i));
    if (!os) throw FormatError("key file: write failed");
}

SecretKey load_secret_key(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open: " + path);
    auto [params, c_g] = take_header(is, 1);
    params.validate();
    const auto field = gf::Field::binary(params.d);
    const F& f = *field;

    Poly g(params.t + 1);
    for (auto& c : g) c = take<std::uint32_t>(is);
    p_trim(g);
    if (p_deg(g) != static_cast<int>(params.t) && params.t > 0)
        throw FormatError("key file: goppa polynomial degree mismatch");
    std::vector<std::uint32_t> support(params.n_g), perm(params.n_g);
    for (auto& v : support) {
        v = take<std::uint32_t>(is);
        if (v >= f.order() || p_eval(f, g, v) == 0)
            throw FormatError("key file: invalid support element");
    }
    std::vector<bool> seen(params.n_g, false);
    for (auto& v : perm) {
        v = take<std::uint32_t>(is);
        if (v >= params.n_g || seen[v]) throw FormatError("key file: invalid permutation");
        seen[v] = true;
    }
    BitMatrix s(c_g, c_g);
    for (unsigned i = 0; i < c_g; ++i) s.row(i) = take_bits(is, c_g);

    // rebuild the derived material exactly as keygen does
    std::vector<BitVec> parity(params.d * params.t, BitVec(params.n_g));
    for (unsigned j = 0; j < params.n_g; ++j) {
        const std::uint32_t ginv = f.inv(p_eval(f, g, support[j]));
        std::uint32_t powl = 1;
        for (unsigned i = 0; i < params.t; ++i) {
            const std::uint32_t entry = f.mul(powl, ginv);
            for (unsigned bit = 0; bit < params.d; ++bit)
                if (entry >> bit & 1) parity[i * params.d + bit].set(j, 1);
            powl = f.mul(powl, support[j]);
        }
    }
    auto pivots = rref_bits(parity, params.n_g);
    if (params.n_g - pivots.size() != c_g)
        throw FormatError("key file: dimension does not match the goppa code");
    std::vector<bool> is_pivot(params.n_g, false);
    for (auto p : pivots) is_pivot[p] = true;

    SecretKey sec;
    sec.params = params;
    sec.c_g = c_g;
    sec.field = field;
    sec.goppa = std::move(g);
    sec.support = std::move(support);
    sec.perm = std::move(perm);
    for (std::uint32_t c = 0; c < params.n_g; ++c)
        if (!is_pivot[c]) sec.info_cols.push_back(c);
    sec.g_goppa = BitMatrix(c_g, params.n_g);
    for (unsigned r = 0; r < c_g; ++r) {
        const std::uint32_t fc = sec.info_cols[r];
        sec.g_goppa.set(r, fc, 1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            if (parity[pr].get(fc)) sec.g_goppa.set(r, pivots[pr], 1);
    }
    if (rank_bits(s) != c_g) throw FormatError("key file: scrambler not invertible");
    sec.scrambler = std::move(s);
    sec.scrambler_inv = invert_bits(sec.scrambler);
    if (params.t > 0) {
        sec.inv_lin.resize(params.n_g);
        for (unsigned i = 0; i < params.n_g; ++i)
            sec.inv_lin[i] = p_invmod(f, Poly{sec.support[i], 1}, sec.goppa);
        Poly h = {0, 1};
        const std::uint64_t squarings = static_cast<std::uint64_t>(params.d) * params.t - 1;
        for (std::uint64_t i = 0; i < squarings; ++i) h = p_mulmod(f, h, h, sec.goppa);
        sec.sqrt_z = h;
    }
    return sec;
}

} // namespace nuhuncc::mce
