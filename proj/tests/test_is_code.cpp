#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nuhuncc/errors.hpp"
#include "nuhuncc/is_code.hpp"

#include <cmath>
#include <cstdio>
#include <map>

using namespace nuhuncc;
using namespace nuhuncc::isc;
using gf::Field;
using gf::Matrix;

TEST_CASE("paper demo matrix over GF(11): identities and encode form") {
    auto f = Field::prime(11);
    auto gis = Matrix::from_rows(f, {{3, 3, 6}, {8, 4, 10}, {1, 3, 6}});
    auto code = LinearIsCode::from_matrix(f, 1, gis);
    code.check_identities();
    CHECK(code.ks == 1);
    CHECK(code.w == 2);

    // column encode: x_0 = 3 m1 + 8 m2 + 1 m3, etc.
    auto m = Matrix::from_rows(f, {{2}, {5}, {7}});
    auto x = code.encode(m);
    CHECK(x.at(0, 0) == (3 * 2 + 8 * 5 + 1 * 7) % 11);
    CHECK(x.at(1, 0) == (3 * 2 + 4 * 5 + 3 * 7) % 11);
    CHECK(x.at(2, 0) == (6 * 2 + 10 * 5 + 6 * 7) % 11);

    CHECK(code.decode(x) == m);

    // exhaustive round-trip over all message columns
    for (std::uint32_t a = 0; a < 11; ++a)
        for (std::uint32_t b = 0; b < 11; ++b)
            for (std::uint32_t c = 0; c < 11; ++c) {
                auto col = Matrix::from_rows(f, {{a}, {b}, {c}});
                CHECK(code.decode(code.encode(col)) == col);
            }
}

TEST_CASE("degenerate k_s = 0: square invertible generator, no protected rows") {
    auto f = Field::binary(3);
    auto code = LinearIsCode::build(f, 3, 0, 5);
    CHECK(code.ks == 0);
    CHECK(code.g_star.rows() == 0);
    CHECK(gf::rank(code.g_is) == 3);
    Rng rng(1);
    auto m = gf::random_matrix(f, 3, 4, [&](std::uint64_t b) { return rng.below(b); });
    CHECK(code.decode(code.encode(m)) == m);
}

TEST_CASE("built codes satisfy all matrix identities") {
    for (auto [mu, ell, ks] : {std::tuple{4u, 4u, 2u}, {4u, 3u, 1u}, {8u, 5u, 2u}, {6u, 6u, 3u}}) {
        CAPTURE(mu);
        CAPTURE(ell);
        CAPTURE(ks);
        auto code = LinearIsCode::build(Field::binary(mu), ell, ks, 7);
        code.check_identities();
        CHECK(gf::rank(code.g_is) == ell);
        CHECK(code.h.rows() == ks);
        CHECK(code.g_tilde.rows() == ell - ks);
    }
    // mu < ell rejected for binary extensions
    CHECK_THROWS_AS((void)LinearIsCode::build(Field::binary(2), 3, 1, 7), UsageError);
    CHECK_THROWS_AS((void)LinearIsCode::build(Field::binary(4), 4, 4, 7), UsageError);
}

TEST_CASE("zero message encodes to zero and unit columns recover") {
    auto f = Field::binary(4);
    auto code = LinearIsCode::build(f, 4, 2, 9);
    auto zero = Matrix(f, 4, 3);
    CHECK(code.encode(zero).is_zero());

    auto I = Matrix::identity(f, 4);
    CHECK(code.decode(code.encode(I)) == I);

    auto bad = Matrix(f, 3, 1);
    CHECK_THROWS_AS((void)code.encode(bad), UsageError);
}

TEST_CASE("exhaustive round-trip, ell=2 over GF(4)") {
    auto f = Field::binary(2);
    auto code = LinearIsCode::build(f, 2, 1, 3);
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b) {
            auto col = Matrix::from_rows(f, {{a}, {b}});
            CHECK(code.decode(code.encode(col)) == col);
        }
}

TEST_CASE("random round-trip and column locality over GF(8)") {
    auto f = Field::binary(3);
    auto code = LinearIsCode::build(f, 3, 1, 21);
    Rng rng(2);
    auto m = gf::random_matrix(f, 3, 16, [&](std::uint64_t b) { return rng.below(b); });
    auto x = code.encode(m);
    CHECK(code.decode(x) == m);

    // column locality: changing column 5 of M leaves all other columns of X unchanged
    auto m2 = m;
    m2.at(1, 5) = f->add(m2.at(1, 5), 1);
    auto x2 = code.encode(m2);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 16; ++c) {
            if (c == 5) continue;
            CHECK(x.at(r, c) == x2.at(r, c));
        }
}

TEST_CASE("same seed gives identical codes") {
    auto f11 = Field::prime(11);
    auto a = LinearIsCode::build(f11, 3, 1, 99);
    auto b = LinearIsCode::build(f11, 3, 1, 99);
    CHECK(a.g_is == b.g_is);
    auto c = LinearIsCode::build(f11, 3, 1, 100);
    CHECK(!(c.g_is == a.g_is));

    auto na = NonlinearIsCode::build(8, 4, 2, 11);
    auto nb = NonlinearIsCode::build(8, 4, 2, 11);
    for (std::uint32_t bin = 0; bin < 4; ++bin)
        for (std::uint32_t off = 0; off < 64; ++off)
            CHECK(na.word(bin, off) == nb.word(bin, off));
}

TEST_CASE("nonlinear smallest instance and bijection onto cells") {
    auto code = NonlinearIsCode::build(2, 0, 1, 1);
    CHECK(code.ks() == 1);
    CHECK(code.kw() == 1);

    // all 2^ell inputs map onto the multiset of table entries exactly once
    for (unsigned ell : {2u, 8u}) {
        auto c = NonlinearIsCode::build(ell, ell > 2 ? 4u : 0u, 1, 77);
        std::map<std::uint32_t, int> from_encode, from_table;
        for (std::uint32_t v = 0; v < (1u << ell); ++v) {
            BitVec col(ell);
            col.write_uint(0, ell, v);
            from_encode[static_cast<std::uint32_t>(c.encode(col).read_uint(0, ell))]++;
        }
        for (std::uint32_t bin = 0; bin < (1u << c.ks()); ++bin)
            for (std::uint32_t off = 0; off < (1u << c.kw()); ++off) from_table[c.word(bin, off)]++;
        CHECK(from_encode == from_table);
    }

    CHECK_THROWS_AS((void)NonlinearIsCode::build(4, 3, 1, 1), UsageError);
    CHECK_THROWS_AS((void)NonlinearIsCode::build(25, 4, 1, 1), UsageError);
}

TEST_CASE("nonlinear encode matches independent re-lookup, ell=8") {
    auto code = NonlinearIsCode::build(8, 4, 2, 5);
    Rng rng(3);
    for (int it = 0; it < 200; ++it) {
        BitVec col = rng.bits(8);
        auto enc = code.encode(col);
        const auto bin = static_cast<std::uint32_t>(col.read_uint(0, code.ks()));
        const auto off = static_cast<std::uint32_t>(col.read_uint(code.ks(), code.kw()));
        CHECK(enc.read_uint(0, 8) == code.word(bin, off));
    }
}

TEST_CASE("nonlinear decode: identity on duplicate-free codebook, errors otherwise") {
    // search a seed whose ell=3 codebook has no duplicates
    unsigned ell = 3;
    bool found = false;
    for (std::uint64_t seed = 0; seed < 20000 && !found; ++seed) {
        auto code = NonlinearIsCode::build(ell, 1, 1, seed);
        if (code.duplicate_cells() != 0) continue;
        found = true;
        for (std::uint32_t v = 0; v < (1u << ell); ++v) {
            BitVec col(ell);
            col.write_uint(0, ell, v);
            auto res = code.decode(code.encode(col));
            REQUIRE(res.ok());
            CHECK(res.bits == col);
        }
    }
    CHECK(found);

    // a codebook with duplicates yields Ambiguous for a duplicated cell
    bool dup_checked = false;
    for (std::uint64_t seed = 0; seed < 100 && !dup_checked; ++seed) {
        auto code = NonlinearIsCode::build(4, 1, 2, seed);
        if (code.duplicate_cells() == 0) continue;
        for (std::uint32_t v = 0; v < 16 && !dup_checked; ++v) {
            BitVec col(4);
            col.write_uint(0, 4, v);
            auto res = code.decode(code.encode(col));
            if (!res.ok()) {
                CHECK(res.status == NonlinearDecodeResult::Status::Ambiguous);
                CHECK(res.ambiguity >= 2);
                dup_checked = true;
            }
        }
    }
    CHECK(dup_checked);

    // a word missing from the table decodes as Absent
    bool absent_checked = false;
    for (std::uint64_t seed = 0; seed < 100 && !absent_checked; ++seed) {
        auto code = NonlinearIsCode::build(4, 1, 2, seed);
        for (std::uint32_t wv = 0; wv < 16; ++wv) {
            bool present = false;
            for (std::uint32_t bin = 0; bin < (1u << code.ks()) && !present; ++bin)
                for (std::uint32_t off = 0; off < (1u << code.kw()) && !present; ++off)
                    present = code.word(bin, off) == wv;
            if (!present) {
                BitVec x(4);
                x.write_uint(0, 4, wv);
                CHECK(code.decode(x).status == NonlinearDecodeResult::Status::Absent);
                absent_checked = true;
                break;
            }
        }
    }
    CHECK(absent_checked);
}

TEST_CASE("nonlinear decode error frequency matches the table's duplicate fraction") {
    // For a uniform input column the decode error probability equals the
    // fraction of cells holding a duplicated word, computable exactly.
    auto code = NonlinearIsCode::build(12, 6, 2, 99);
    const double exact = static_cast<double>(code.duplicate_cells()) / 4096.0;
    const int trials = 100000;
    int errors = 0;
    Rng rng(123);
    for (int t = 0; t < trials; ++t) {
        BitVec col(12);
        col.write_uint(0, 12, rng.below(4096));
        if (!code.decode(code.encode(col)).ok()) ++errors;
    }
    const double freq = static_cast<double>(errors) / trials;
    const double sigma = std::sqrt(exact * (1 - exact) / trials);
    CHECK(std::abs(freq - exact) <= 3 * sigma + 1e-12);
}

TEST_CASE("duplicate frequency across seeds tracks the birthday estimate, ell=16") {
    // expected duplicated-cell fraction per cell: 1 - (1 - 2^-ell)^(2^ell - 1)
    const unsigned ell = 16;
    const double cells = std::pow(2.0, ell);
    const double analytic = 1.0 - std::pow(1.0 - 1.0 / cells, cells - 1.0);
    double mean = 0.0;
    const int seeds = 100;
    for (int s = 0; s < seeds; ++s) {
        auto code = NonlinearIsCode::build(ell, 8, 4, 1000 + s);
        mean += static_cast<double>(code.duplicate_cells()) / cells;
    }
    mean /= seeds;
    MESSAGE("measured " << mean << " analytic " << analytic);
    CHECK(mean == doctest::Approx(analytic).epsilon(0.02));
}

TEST_CASE("code descriptor files round-trip") {
    auto f = Field::binary(4);
    auto code = LinearIsCode::build(f, 4, 2, 31);
    save_linear(code, "test_code_lin.bin");
    auto back = load_linear("test_code_lin.bin");
    CHECK(back.g_is == code.g_is);
    CHECK(back.h == code.h);
    CHECK(back.g_tilde == code.g_tilde);
    CHECK(back.ks == code.ks);
    std::remove("test_code_lin.bin");

    auto ncode = NonlinearIsCode::build(8, 4, 2, 13);
    save_nonlinear(ncode, "test_code_nl.bin");
    auto nback = load_nonlinear("test_code_nl.bin");
    CHECK(nback.rng_seed() == ncode.rng_seed());
    for (std::uint32_t bin = 0; bin < 4; ++bin)
        for (std::uint32_t off = 0; off < 64; ++off)
            CHECK(nback.word(bin, off) == ncode.word(bin, off));
    std::remove("test_code_nl.bin");

    CHECK_THROWS_AS((void)load_linear("missing_code.bin"), FormatError);
}

TEST_CASE("coset structure: equal counts of consistent codewords, ell=2 mu=2") {
    // for each observation of w symbols of x, the number of messages mapping
    // to it is the same in every coset (value of the protected symbol)
    auto f = Field::binary(2);
    auto code = LinearIsCode::build(f, 2, 1, 3);
    for (unsigned obs_row = 0; obs_row < 2; ++obs_row) {
        std::map<std::pair<std::uint32_t, std::uint32_t>, int> count; // (z, m_ks) -> n
        for (std::uint32_t a = 0; a < 4; ++a)
            for (std::uint32_t b = 0; b < 4; ++b) {
                auto col = Matrix::from_rows(f, {{a}, {b}});
                auto x = code.encode(col);
                count[{x.at(obs_row, 0), a}]++;
            }
        for (std::uint32_t z = 0; z < 4; ++z)
            for (std::uint32_t m = 0; m < 4; ++m)
                CHECK(count[{z, m}] == 1); // 2^(mu(ell-w-ks)) = 1
    }
}
