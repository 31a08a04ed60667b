#include "nuhuncc/is_code.hpp"
#include "nuhuncc/errors.hpp"

#include <cstring>
#include <fstream>

namespace nuhuncc::isc {

namespace {

// Smallest field element generating a normal basis {t, t^2, t^4, ...}:
// the mu Frobenius powers must be linearly independent over GF(2).
std::uint32_t find_normal_element(const gf::Field& f) {
    const unsigned mu = f.mu();
    for (std::uint32_t cand = 2; cand < f.order(); ++cand) {
        std::vector<std::uint32_t> pow(mu);
        std::uint32_t v = cand;
        for (unsigned i = 0; i < mu; ++i) {
            pow[i] = v;
            v = f.mul(v, v);
        }
        // rank of the mu x mu bit matrix by elimination
        std::vector<std::uint32_t> rows = pow;
        unsigned rank = 0;
        for (int bit = static_cast<int>(mu) - 1; bit >= 0 && rank < mu; --bit) {
            unsigned pivot = rank;
            while (pivot < mu && !(rows[pivot] >> bit & 1)) ++pivot;
            if (pivot == mu) continue;
            std::swap(rows[rank], rows[pivot]);
            for (unsigned r = 0; r < mu; ++r)
                if (r != rank && (rows[r] >> bit & 1)) rows[r] ^= rows[rank];
            ++rank;
        }
        if (rank == mu) return cand;
    }
    throw std::logic_error("no normal basis element found");
}

} // namespace

LinearIsCode LinearIsCode::build(gf::FieldPtr field, unsigned ell, unsigned ks,
                                 std::uint64_t rng_seed) {
    if (ell < 1) throw UsageError("linear code: need at least one link");
    if (ks >= ell) throw UsageError("linear code: k_s must be below the link count");

    gf::Matrix gis;
    if (field->kind() == gf::FieldKind::BinaryExtension) {
        if (field->mu() < ell)
            throw UsageError("linear code: extension degree must be at least the link count");
        // Gabidulin-style Moore matrix over a normal basis: row i holds the
        // 2^i-th Frobenius powers of ell independent basis elements. Rows
        // 0..w-1 generate the MRD code; the remaining ks rows (placed on top
        // as G*) are outside it, and the full matrix is invertible.
        const std::uint32_t theta = find_normal_element(*field);
        std::vector<std::uint32_t> basis(ell);
        std::uint32_t v = theta;
        for (unsigned j = 0; j < ell; ++j) {
            basis[j] = v;
            v = field->mul(v, v);
        }
        const unsigned w = ell - ks;
        gis = gf::Matrix(field, ell, ell);
        for (unsigned i = 0; i < ell; ++i) {
            // Moore row index: G* rows continue the code rows' power sequence
            const unsigned power_row = i < ks ? w + i : i - ks;
            for (unsigned j = 0; j < ell; ++j) {
                std::uint32_t e = basis[j];
                for (unsigned s = 0; s < power_row; ++s) e = field->mul(e, e);
                gis.at(i, j) = e;
            }
        }
    } else {
        // prime demo fields: seeded rejection sampling of an invertible matrix
        return build_random(std::move(field), ell, ks, rng_seed);
    }
    return from_matrix(std::move(field), ks, gis, rng_seed);
}

LinearIsCode LinearIsCode::build_random(gf::FieldPtr field, unsigned ell, unsigned ks,
                                        std::uint64_t rng_seed) {
    if (ell < 1) throw UsageError("linear code: need at least one link");
    if (ks >= ell) throw UsageError("linear code: k_s must be below the link count");
    Rng rng(rng_seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        auto gis = gf::random_matrix(field, ell, ell,
                                     [&](std::uint64_t b) { return rng.below(b); });
        if (gf::rank(gis) == ell) return from_matrix(std::move(field), ks, gis, rng_seed);
    }
    throw CryptoError("linear code: sampling failed");
}

LinearIsCode LinearIsCode::from_matrix(gf::FieldPtr field, unsigned ks,
                                       const gf::Matrix& g_is, std::uint64_t rng_seed) {
    if (g_is.rows() != g_is.cols()) throw UsageError("linear code: encoding matrix not square");
    const auto ell = static_cast<unsigned>(g_is.rows());
    if (ks >= ell) throw UsageError("linear code: k_s must be below the link count");
    if (gf::rank(g_is) != ell) throw CryptoError("linear code: encoding matrix not invertible");

    LinearIsCode code;
    code.field = std::move(field);
    code.ell = ell;
    code.ks = ks;
    code.w = ell - ks;
    code.rng_seed = rng_seed;
    code.g_is = g_is;
    code.g_star = g_is.slice_rows(0, ks);
    code.g = g_is.slice_rows(ks, code.w);

    // H: rows orthogonal to the code, normalized against G*.
    const auto n_of_g = gf::null_space_basis(code.g); // ks x ell
    code.h = gf::inverse(n_of_g * code.g_star.transpose()) * n_of_g;
    // G~: rows orthogonal to G*, normalized against G.
    const auto n_of_gstar = gf::null_space_basis(code.g_star); // w x ell
    code.g_tilde = gf::inverse(n_of_gstar * code.g.transpose()) * n_of_gstar;

    code.check_identities();
    return code;
}

void LinearIsCode::check_identities() const {
    if (!(h * g.transpose()).is_zero()) throw CryptoError("linear code: H G^T != 0");
    if (!(h * g_star.transpose()).is_identity()) throw CryptoError("linear code: H G*^T != I");
    if (!(g_tilde * g_star.transpose()).is_zero()) throw CryptoError("linear code: G~ G*^T != 0");
    if (!(g_tilde * g.transpose()).is_identity()) throw CryptoError("linear code: G~ G^T != I");
}

gf::Matrix LinearIsCode::encode(const gf::Matrix& m) const {
    if (m.rows() != ell) throw UsageError("linear encode: row count mismatch");
    // X^T = M^T G_IS, i.e. X = G_IS^T M
    return g_is.transpose() * m;
}

gf::Matrix LinearIsCode::decode(const gf::Matrix& x) const {
    if (x.rows() != ell) throw UsageError("linear decode: row count mismatch");
    return gf::Matrix::vstack(h * x, g_tilde * x);
}

// ---------------------------------------------------------------------------

NonlinearIsCode NonlinearIsCode::build(unsigned ell, unsigned w, unsigned ell_eps,
                                       std::uint64_t rng_seed) {
    if (ell < 1 || ell > 24) throw UsageError("nonlinear code: ell must be in 1..24");
    if (w + ell_eps >= ell) throw UsageError("nonlinear code: k_s = ell - w - ell_eps must be >= 1");

    NonlinearIsCode code;
    code.ell_ = ell;
    code.w_ = w;
    code.ell_eps_ = ell_eps;
    code.ks_ = ell - w - ell_eps;
    code.kw_ = ell - code.ks_;
    code.rng_seed_ = rng_seed;

    const std::size_t cells = std::size_t{1} << ell;
    const std::uint32_t mask = (ell == 32) ? 0xffffffffu : ((1u << ell) - 1);
    code.codebook_.resize(cells);
    code.lookup_.reserve(cells * 2);
    Rng rng(rng_seed);
    for (std::size_t cell = 0; cell < cells; ++cell) {
        const auto word = static_cast<std::uint32_t>(rng.next_u64()) & mask;
        code.codebook_[cell] = word;
        auto [it, fresh] = code.lookup_.try_emplace(word, static_cast<std::uint32_t>(cell), 0u);
        it->second.second += 1;
        (void)fresh;
    }
    for (auto& [word, entry] : code.lookup_)
        if (entry.second > 1) code.duplicate_cells_ += entry.second;
    return code;
}

BitVec NonlinearIsCode::encode(const BitVec& column) const {
    if (column.size() != ell_) throw UsageError("nonlinear encode: column length mismatch");
    const auto bin = static_cast<std::uint32_t>(column.read_uint(0, ks_));
    const auto offset = static_cast<std::uint32_t>(column.read_uint(ks_, kw_));
    BitVec out(ell_);
    out.write_uint(0, ell_, word(bin, offset));
    return out;
}

NonlinearDecodeResult NonlinearIsCode::decode(const BitVec& x) const {
    if (x.size() != ell_) throw UsageError("nonlinear decode: word length mismatch");
    NonlinearDecodeResult res;
    const auto w = static_cast<std::uint32_t>(x.read_uint(0, ell_));
    auto it = lookup_.find(w);
    if (it == lookup_.end()) {
        res.status = NonlinearDecodeResult::Status::Absent;
        return res;
    }
    if (it->second.second > 1) {
        res.status = NonlinearDecodeResult::Status::Ambiguous;
        res.ambiguity = it->second.second;
        return res;
    }
    const std::uint32_t cell = it->second.first;
    res.bits = BitVec(ell_);
    res.bits.write_uint(0, ks_, cell >> kw_);
    res.bits.write_uint(ks_, kw_, cell & ((kw_ == 32 ? 0xffffffffu : (1u << kw_) - 1)));
    return res;
}

// ---------------------------------------------------------------------------
// Descriptor files

namespace {

constexpr char kMagic[8] = {'N', 'U', 'H', 'C', 'O', 'D', 'E', '1'};

template <typename T>
void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T take(std::ifstream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw FormatError("code file: truncated");
    return v;
}

void put_field(std::ofstream& os, const gf::Field& f) {
    put<std::uint8_t>(os, static_cast<std::uint8_t>(f.kind()));
    if (f.kind() == gf::FieldKind::BinaryExtension) {
        put<std::uint32_t>(os, f.mu());
        put<std::uint64_t>(os, f.modulus_poly());
    } else {
        put<std::uint32_t>(os, f.order());
    }
}

gf::FieldPtr take_field(std::ifstream& is) {
    const auto kind = take<std::uint8_t>(is);
    if (kind == static_cast<std::uint8_t>(gf::FieldKind::BinaryExtension)) {
        const auto mu = take<std::uint32_t>(is);
        const auto poly = take<std::uint64_t>(is);
        return gf::Field::binary(mu, poly);
    }
    if (kind == static_cast<std::uint8_t>(gf::FieldKind::Prime))
        return gf::Field::prime(take<std::uint32_t>(is));
    throw FormatError("code file: unknown field kind");
}

void put_matrix(std::ofstream& os, const gf::Matrix& m) {
    put<std::uint32_t>(os, static_cast<std::uint32_t>(m.rows()));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(m.cols()));
    for (auto v : m.values()) put<std::uint32_t>(os, v);
}

gf::Matrix take_matrix(std::ifstream& is, const gf::FieldPtr& f) {
    const auto rows = take<std::uint32_t>(is);
    const auto cols = take<std::uint32_t>(is);
    if (rows > 4096 || cols > 4096) throw FormatError("code file: implausible matrix size");
    gf::Matrix m(f, rows, cols);
    for (auto& v : m.values()) {
        v = take<std::uint32_t>(is);
        if (v >= f->order()) throw FormatError("code file: element out of field range");
    }
    return m;
}

} // namespace

void save_linear(const LinearIsCode& code, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw FormatError("cannot open for writing: " + path);
    os.write(kMagic, sizeof(kMagic));
    put<std::uint8_t>(os, 0); // linear
    put_field(os, *code.field);
    put<std::uint32_t>(os, code.ell);
    put<std::uint32_t>(os, code.ks);
    put<std::uint64_t>(os, code.rng_seed);
    put_matrix(os, code.g_is);
    put_matrix(os, code.h);
    put_matrix(os, code.g_tilde);
    if (!os) throw FormatError("code file: write failed");
}

LinearIsCode load_linear(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open: " + path);
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw FormatError("code file: bad magic");
    if (take<std::uint8_t>(is) != 0) throw FormatError("code file: not a linear descriptor");
    auto field = take_field(is);
    const auto ell = take<std::uint32_t>(is);
    const auto ks = take<std::uint32_t>(is);
    const auto seed = take<std::uint64_t>(is);
    auto gis = take_matrix(is, field);
    auto h = take_matrix(is, field);
    auto gt = take_matrix(is, field);
    if (gis.rows() != ell) throw FormatError("code file: dimension mismatch");
    auto code = LinearIsCode::from_matrix(field, ks, gis, seed);
    // audit copies must agree with the re-derived decode matrices
    if (!(code.h == h) || !(code.g_tilde == gt))
        throw FormatError("code file: stored decode matrices do not match");
    return code;
}

void save_nonlinear(const NonlinearIsCode& code, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw FormatError("cannot open for writing: " + path);
    os.write(kMagic, sizeof(kMagic));
    put<std::uint8_t>(os, 1); // nonlinear
    put<std::uint32_t>(os, code.ell());
    put<std::uint32_t>(os, code.w());
    put<std::uint32_t>(os, code.ell_eps());
    put<std::uint64_t>(os, code.rng_seed());
    if (!os) throw FormatError("code file: write failed");
}

NonlinearIsCode load_nonlinear(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open: " + path);
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw FormatError("code file: bad magic");
    if (take<std::uint8_t>(is) != 1) throw FormatError("code file: not a nonlinear descriptor");
    const auto ell = take<std::uint32_t>(is);
    const auto w = take<std::uint32_t>(is);
    const auto eps = take<std::uint32_t>(is);
    const auto seed = take<std::uint64_t>(is);
    return NonlinearIsCode::build(ell, w, eps, seed);
}

} // namespace nuhuncc::isc
