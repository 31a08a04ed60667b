#include "nuhuncc/gf.hpp"
#include "nuhuncc/opcount.hpp"

#include <array>

namespace nuhuncc {

namespace opcount {

namespace {
thread_local OpCounters* g_active = nullptr;
}

OpCounters* active() { return g_active; }

Scope::Scope() : previous_(g_active) { g_active = &counters_; }
Scope::~Scope() { g_active = previous_; }

} // namespace opcount

namespace gf {

namespace {

// Low-weight irreducible polynomials over GF(2), degrees 1..24.
// Entry k holds the modulus for mu = k+1, leading bit included.
constexpr std::array<std::uint64_t, 24> kDefaultModuli = {
    0x3,        // x + 1
    0x7,        // x^2 + x + 1
    0xB,        // x^3 + x + 1
    0x13,       // x^4 + x + 1
    0x25,       // x^5 + x^2 + 1
    0x43,       // x^6 + x + 1
    0x89,       // x^7 + x^3 + 1
    0x11B,      // x^8 + x^4 + x^3 + x + 1
    0x211,      // x^9 + x^4 + 1
    0x409,      // x^10 + x^3 + 1
    0x805,      // x^11 + x^2 + 1
    0x1053,     // x^12 + x^6 + x^4 + x + 1
    0x201B,     // x^13 + x^4 + x^3 + x + 1
    0x4443,     // x^14 + x^10 + x^6 + x + 1
    0x8003,     // x^15 + x + 1
    0x1100B,    // x^16 + x^12 + x^3 + x + 1
    0x20009,    // x^17 + x^3 + 1
    0x40081,    // x^18 + x^7 + 1
    0x80027,    // x^19 + x^5 + x^2 + x + 1
    0x100009,   // x^20 + x^3 + 1
    0x200005,   // x^21 + x^2 + 1
    0x400003,   // x^22 + x + 1
    0x800021,   // x^23 + x^5 + 1
    0x1000087,  // x^24 + x^7 + x^2 + x + 1
};

unsigned poly_degree(std::uint64_t p) {
    unsigned d = 0;
    while (p > 1) { p >>= 1; ++d; }
    return d;
}

// Remainder of a mod b over GF(2)[x].
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    const unsigned db = poly_degree(b);
    while (a != 0 && poly_degree(a) >= db) {
        a ^= b << (poly_degree(a) - db);
    }
    return a;
}

} // namespace

std::uint64_t Field::default_modulus(unsigned mu) {
    if (mu < 1 || mu > kDefaultModuli.size())
        throw std::invalid_argument("no default modulus for mu=" + std::to_string(mu));
    return kDefaultModuli[mu - 1];
}

bool Field::is_irreducible_gf2(std::uint64_t poly, unsigned degree) {
    if (degree == 0 || poly >> degree != 1) return false;
    if ((poly & 1) == 0) return degree == 1 && poly == 2; // divisible by x
    for (unsigned d = 1; d <= degree / 2; ++d) {
        for (std::uint64_t q = (std::uint64_t{1} << d); q < (std::uint64_t{2} << d); ++q) {
            if (poly_mod(poly, q) == 0) return false;
        }
    }
    return true;
}

bool Field::is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::shared_ptr<const Field> Field::binary(unsigned mu) {
    return binary(mu, default_modulus(mu));
}

std::shared_ptr<const Field> Field::binary(unsigned mu, std::uint64_t modulus_poly) {
    if (mu < 1 || mu > 24) throw std::invalid_argument("binary extension degree must be in 1..24");
    if (poly_degree(modulus_poly) != mu || !is_irreducible_gf2(modulus_poly, mu))
        throw std::invalid_argument("modulus polynomial is not irreducible of the stated degree");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::BinaryExtension;
    f->mu_ = mu;
    f->poly_ = modulus_poly;
    f->order_ = std::uint32_t{1} << mu;
    if (mu <= 16) f->build_tables();
    return f;
}

std::shared_ptr<const Field> Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field modulus is not prime");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Prime;
    f->order_ = p;
    return f;
}

std::uint32_t Field::clmul_mod(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    // reduce degree < 2*mu down to < mu
    for (int d = static_cast<int>(2 * mu_ - 2); d >= static_cast<int>(mu_); --d) {
        if (acc >> d & 1) acc ^= poly_ << (d - static_cast<int>(mu_));
    }
    return static_cast<std::uint32_t>(acc);
}

void Field::build_tables() {
    const std::uint32_t group = order_ - 1;
    if (group == 1) { // GF(2): trivial group
        exp_ = {1, 1};
        log_.assign(order_, 0);
        has_tables_ = true;
        return;
    }
    // find a generator by walking candidates until the cycle covers the group
    exp_.assign(2 * group, 0);
    log_.assign(order_, 0);
    for (std::uint32_t g = 2; g < order_; ++g) {
        std::uint32_t v = 1;
        std::uint32_t steps = 0;
        bool full = true;
        for (; steps < group; ++steps) {
            exp_[steps] = v;
            v = clmul_mod(v, g);
            if (v == 1 && steps + 1 < group) { full = false; break; }
        }
        if (full && v == 1) {
            for (std::uint32_t i = 0; i < group; ++i) {
                exp_[group + i] = exp_[i];
                log_[exp_[i]] = i;
            }
            has_tables_ = true;
            return;
        }
    }
    throw std::logic_error("no multiplicative generator found");
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    opcount::add_gf_add(1);
    if (kind_ == FieldKind::BinaryExtension) return a ^ b;
    std::uint32_t s = a + b;
    if (s >= order_) s -= order_;
    return s;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const {
    if (kind_ == FieldKind::BinaryExtension) return a ^ b;
    return a >= b ? a - b : a + order_ - b;
}

std::uint32_t Field::neg(std::uint32_t a) const {
    if (kind_ == FieldKind::BinaryExtension) return a;
    return a == 0 ? 0 : order_ - a;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    opcount::add_gf_mul(1);
    if (kind_ == FieldKind::Prime)
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % order_);
    if (a == 0 || b == 0) return 0;
    if (has_tables_) return exp_[log_[a] + log_[b]];
    return clmul_mod(a, b);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    std::uint32_t base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (kind_ == FieldKind::Prime) {
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = order_, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        if (t < 0) t += order_;
        return static_cast<std::uint32_t>(t);
    }
    if (has_tables_) {
        const std::uint32_t group = order_ - 1;
        return exp_[(group - log_[a]) % group];
    }
    return pow(a, order_ - 2);
}

std::string Field::describe() const {
    if (kind_ == FieldKind::Prime) return "GF(" + std::to_string(order_) + ")";
    return "GF(2^" + std::to_string(mu_) + ")";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(FieldPtr f, std::size_t n) {
    Matrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldPtr f, const std::vector<std::vector<std::uint32_t>>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows: empty");
    Matrix m(f, rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            f->check_element(rows[r][c]);
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (!field_ || !o.field_ || !field_->same(*o.field_))
        throw std::invalid_argument("matrix product: field mismatch");
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix product: dimension mismatch");
    const Field& f = *field_;
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint32_t a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                r.at(i, j) = f.add(r.at(i, j), f.mul(a, o.at(k, j)));
            }
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (!field_->same(*o.field_) || rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum: shape or field mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < v_.size(); ++i) r.values()[i] = field_->add(v_[i], o.v_[i]);
    return r;
}

Matrix Matrix::slice_rows(std::size_t first, std::size_t count) const {
    Matrix r(field_, count, cols_);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            r.at(i, c) = at(first + i, c);
    return r;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (!top.field_->same(*bottom.field_) || top.cols_ != bottom.cols_)
        throw std::invalid_argument("vstack: shape or field mismatch");
    Matrix r(top.field_, top.rows_ + bottom.rows_, top.cols_);
    for (std::size_t i = 0; i < top.rows_; ++i)
        for (std::size_t c = 0; c < top.cols_; ++c) r.at(i, c) = top.at(i, c);
    for (std::size_t i = 0; i < bottom.rows_; ++i)
        for (std::size_t c = 0; c < top.cols_; ++c) r.at(top.rows_ + i, c) = bottom.at(i, c);
    return r;
}

bool Matrix::is_zero() const {
    for (auto v : v_) if (v != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? 1u : 0u)) return false;
    return true;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
// First-nonzero pivoting, columns scanned left to right.
std::vector<std::size_t> rref(Matrix& m) {
    const Field& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(sel, c), m.at(row, c));
        const std::uint32_t pinv = f.inv(m.at(row, col));
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(row, c) = f.mul(m.at(row, c), pinv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const std::uint32_t factor = m.at(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return a;
    const Field& f = *a.field();
    // [A | I] -> [I | A^-1]
    Matrix aug(a.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, n + r) = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("inverse: singular matrix");
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) throw std::domain_error("inverse: singular matrix");
    Matrix inv(a.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    (void)f;
    return inv;
}

Matrix null_space_basis(const Matrix& a) {
    Matrix m = a;
    auto pivots = rref(m);
    if (pivots.size() != a.rows())
        throw std::domain_error("null_space_basis: input is rank deficient");
    const Field& f = *a.field();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(a.field(), free_cols.size(), a.cols());
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        const std::size_t fc = free_cols[i];
        basis.at(i, fc) = 1;
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
            // pivot variable = -(entry at free column)
            basis.at(i, pivots[pr]) = f.neg(m.at(pr, fc));
        }
    }
    return basis;
}

Matrix random_matrix(FieldPtr f, std::size_t rows, std::size_t cols,
                     const std::function<std::uint64_t(std::uint64_t)>& draw_below) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = static_cast<std::uint32_t>(draw_below(f->order()));
    return m;
}

} // namespace gf
} // namespace nuhuncc
