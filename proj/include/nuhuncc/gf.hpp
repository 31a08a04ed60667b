#ifndef NUHUNCC_GF_HPP
#define NUHUNCC_GF_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace nuhuncc::gf {

enum class FieldKind : std::uint8_t { BinaryExtension = 0, Prime = 1 };

/// Arithmetic context for GF(2^mu) in polynomial basis or a prime field GF(p).
/// Element values are plain uint32_t below the field order.
///
/// GF(2^mu): construction verifies the modulus is irreducible by trial
/// division against every polynomial of degree <= mu/2. Multiplication uses
/// log/exp tables up to mu = 16 and carry-less shift-and-add beyond that.
class Field {
public:
    static std::shared_ptr<const Field> binary(unsigned mu);
    static std::shared_ptr<const Field> binary(unsigned mu, std::uint64_t modulus_poly);
    static std::shared_ptr<const Field> prime(std::uint32_t p);

    FieldKind kind() const { return kind_; }
    unsigned mu() const { return mu_; }
    std::uint64_t modulus_poly() const { return poly_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t characteristic() const { return kind_ == FieldKind::Prime ? order_ : 2; }

    bool same(const Field& o) const {
        return kind_ == o.kind_ && order_ == o.order_ && poly_ == o.poly_;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    void check_element(std::uint32_t v) const {
        if (v >= order_) throw std::invalid_argument("field element out of range");
    }

    /// Default low-weight irreducible for GF(2^mu), 1 <= mu <= 24.
    static std::uint64_t default_modulus(unsigned mu);
    static bool is_irreducible_gf2(std::uint64_t poly, unsigned degree);
    static bool is_prime(std::uint32_t p);

    std::string describe() const;

private:
    Field() = default;

    FieldKind kind_ = FieldKind::BinaryExtension;
    unsigned mu_ = 0;          // extension degree (binary case)
    std::uint64_t poly_ = 0;   // modulus polynomial incl. leading bit (binary case)
    std::uint32_t order_ = 0;  // 2^mu or p

    // log/exp tables for small binary extensions
    bool has_tables_ = false;
    std::vector<std::uint32_t> log_, exp_;

    std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b) const;
    void build_tables();
};

using FieldPtr = std::shared_ptr<const Field>;

/// Dense row-major matrix of field elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), v_(rows * cols, 0) {}

    static Matrix identity(FieldPtr f, std::size_t n);
    static Matrix from_rows(FieldPtr f, const std::vector<std::vector<std::uint32_t>>& rows);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t r, std::size_t c) const { return v_[r * cols_ + c]; }
    std::uint32_t& at(std::size_t r, std::size_t c) { return v_[r * cols_ + c]; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
    }

    Matrix slice_rows(std::size_t first, std::size_t count) const;
    static Matrix vstack(const Matrix& top, const Matrix& bottom);

    bool is_zero() const;
    bool is_identity() const;

    const std::vector<std::uint32_t>& values() const { return v_; }
    std::vector<std::uint32_t>& values() { return v_; }

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> v_;
};

/// Row echelon machinery. Pivoting is "first nonzero" in deterministic
/// row/column order so derived bases are reproducible.
std::size_t rank(Matrix m);

/// Inverse of a square matrix; throws std::domain_error when singular
/// (singular inputs signal invalid key material upstream).
Matrix inverse(const Matrix& a);

/// Basis N of the right null space of A, as rows: A * N^T = 0,
/// rank(N) = cols - rank(A). Requires A of full row rank.
Matrix null_space_basis(const Matrix& a);

/// Uniformly random matrix from the given RNG draw function.
Matrix random_matrix(FieldPtr f, std::size_t rows, std::size_t cols,
                     const std::function<std::uint64_t(std::uint64_t)>& draw_below);

} // namespace nuhuncc::gf

#endif
