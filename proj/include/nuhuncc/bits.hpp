#ifndef NUHUNCC_BITS_HPP
#define NUHUNCC_BITS_HPP

#include <cstdint>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace nuhuncc {

/// Packed bit vector, LSB-first within each 64-bit word.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    int get(std::size_t i) const {
        return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1u);
    }
    void set(std::size_t i, int b) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (b) words_[i >> 6] |= mask;
        else   words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void append(int b) {
        if (nbits_ % 64 == 0) words_.push_back(0);
        nbits_++;
        set(nbits_ - 1, b);
    }
    void append(const BitVec& other) {
        for (std::size_t i = 0; i < other.size(); ++i) append(other.get(i));
    }

    /// Reads `count` bits starting at `pos`.
    BitVec slice(std::size_t pos, std::size_t count) const {
        BitVec out(count);
        for (std::size_t i = 0; i < count; ++i) out.set(i, get(pos + i));
        return out;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < nbits_; ++i) c += static_cast<std::size_t>(get(i));
        return c;
    }

    /// Interprets bits [pos, pos+count) as an LSB-first integer, count <= 64.
    std::uint64_t read_uint(std::size_t pos, std::size_t count) const {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < count; ++i)
            v |= static_cast<std::uint64_t>(get(pos + i)) << i;
        return v;
    }
    void write_uint(std::size_t pos, std::size_t count, std::uint64_t v) {
        for (std::size_t i = 0; i < count; ++i) set(pos + i, static_cast<int>((v >> i) & 1));
    }

    bool operator==(const BitVec& o) const {
        if (nbits_ != o.nbits_) return false;
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != o.words_[i]) return false;
        return true;
    }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    BitVec operator^(const BitVec& o) const {
        if (nbits_ != o.nbits_) throw std::invalid_argument("BitVec xor: length mismatch");
        BitVec r(nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] ^ o.words_[i];
        return r;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    std::vector<std::uint8_t> to_bytes() const {
        std::vector<std::uint8_t> out((nbits_ + 7) / 8, 0);
        for (std::size_t i = 0; i < nbits_; ++i)
            if (get(i)) out[i >> 3] |= static_cast<std::uint8_t>(1u << (i & 7));
        return out;
    }
    static BitVec from_bytes(const std::vector<std::uint8_t>& bytes, std::size_t nbits) {
        BitVec v(nbits);
        for (std::size_t i = 0; i < nbits; ++i)
            v.set(i, (bytes[i >> 3] >> (i & 7)) & 1);
        return v;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense row-major binary matrix backed by one BitVec per row.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, int b) { data_[r].set(c, b); }

    BitVec& row(std::size_t r) { return data_[r]; }
    const BitVec& row(std::size_t r) const { return data_[r]; }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> data_;
};

/// Deterministic RNG used everywhere reproducibility matters.
///
/// mt19937_64 output is fixed by the standard; the bounded/real draws below
/// avoid std::uniform_*_distribution, whose mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, bound) by rejection, bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do { v = eng_(); } while (v >= limit);
        return v % bound;
    }

    /// Uniform double in [0,1) with 53-bit resolution.
    double real() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    int bernoulli(double p) { return real() < p ? 1 : 0; }

    BitVec bits(std::size_t n, double p = 0.5) {
        BitVec v(n);
        if (p == 0.5) {
            for (auto& w : v.words()) w = eng_();
            // mask tail so equality/popcount see only live bits
            if (n % 64 != 0 && !v.words().empty())
                v.words().back() &= (std::uint64_t{1} << (n % 64)) - 1;
        } else {
            for (std::size_t i = 0; i < n; ++i) v.set(i, bernoulli(p));
        }
        return v;
    }

private:
    std::mt19937_64 eng_;
};

/// FNV-1a over bytes; used for config digests and byte-stability checks.
std::uint64_t fnv1a64(const std::uint8_t* data, std::size_t len, std::uint64_t h = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a64(const std::string& s);

} // namespace nuhuncc

#endif
