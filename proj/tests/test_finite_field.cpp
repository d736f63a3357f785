#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grmds/finite_field.hpp"

using namespace grmds;

namespace {

// Brute-force irreducibility: scan all factor pairs of smaller degree.
bool brute_irreducible(const ZPoly& g) {
    const std::uint64_t p = g.mod();
    const int d = g.degree();
    if (d < 1) return false;
    auto poly_of = [&](std::uint64_t code, int deg) {
        std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1);
        for (int i = 0; i <= deg; ++i) {
            c[static_cast<std::size_t>(i)] = code % p;
            code /= p;
        }
        return ZPoly(p, c);
    };
    for (int da = 1; da <= d / 2; ++da) {
        std::uint64_t span = 1;
        for (int i = 0; i <= da; ++i) span *= p;
        for (std::uint64_t code = 0; code < span; ++code) {
            ZPoly a = poly_of(code, da);
            if (a.degree() != da) continue;
            if (divmod(g, a).second.is_zero()) return false;
        }
    }
    return true;
}

FFElement laplace_det(const FFContext& f, const std::vector<std::vector<FFElement>>& m) {
    const std::size_t k = m.size();
    if (k == 1) return m[0][0];
    FFElement acc = f.zero();
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::vector<FFElement>> minor;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<FFElement> row;
            for (std::size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        FFElement term = f.mul(m[0][j], laplace_det(f, minor));
        acc = j % 2 == 0 ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

}  // namespace

TEST_CASE("irreducibility matches brute-force factor search over F2") {
    for (std::uint64_t code = 0; code < 32; ++code) {
        std::vector<std::uint64_t> c(5);
        std::uint64_t v = code;
        for (auto& x : c) {
            x = v % 2;
            v /= 2;
        }
        c.push_back(1);  // monic degree 5
        ZPoly g(2, c);
        CHECK(is_irreducible(g) == brute_irreducible(g));
    }
}

TEST_CASE("known irreducible and reducible polynomials") {
    CHECK(is_irreducible(ZPoly(2, {1, 1, 0, 0, 1})));        // x^4+x+1
    CHECK(is_irreducible(ZPoly(2, {1, 1, 1, 1, 1})));        // x^4+x^3+x^2+x+1
    CHECK_FALSE(is_irreducible(ZPoly(2, {1, 0, 0, 0, 1})));  // (x+1)^4
    CHECK(is_irreducible(ZPoly(3, {1, 2, 0, 1})));           // over F3
    CHECK_THROWS_AS(is_irreducible(ZPoly(2, {1})), InvalidInputError);
}

TEST_CASE("primitivity distinguishes the two degree-4 irreducibles over F2") {
    CHECK(is_primitive(ZPoly(2, {1, 1, 0, 0, 1})));
    // x^4+x^3+x^2+x+1 has root order 5, not 15
    CHECK_FALSE(is_primitive(ZPoly(2, {1, 1, 1, 1, 1})));
    CHECK_THROWS_AS(is_primitive(ZPoly(2, {1, 0, 0, 0, 1})), InvalidInputError);
}

TEST_CASE("F16 inverse matches exhaustive search") {
    FFContext f(2, ZPoly(2, {1, 1, 0, 0, 1}));
    REQUIRE(f.order() == 16);
    for (std::uint64_t i = 1; i < 16; ++i) {
        FFElement a = f.element_at(i);
        FFElement ia = f.inv(a);
        CHECK(f.mul(a, ia) == f.one());
        std::uint64_t hits = 0;
        for (std::uint64_t j = 1; j < 16; ++j)
            if (f.mul(a, f.element_at(j)) == f.one()) {
                ++hits;
                CHECK(f.element_at(j) == ia);
            }
        CHECK(hits == 1);
    }
    CHECK_THROWS_AS(f.inv(f.zero()), NotAUnitError);
}

TEST_CASE("element encoding round-trips") {
    FFContext f(3, ZPoly(3, {1, 2, 0, 1}));
    for (std::uint64_t i = 0; i < f.order(); ++i) CHECK(f.encode(f.element_at(i)) == i);
}

TEST_CASE("element orders divide the group order and the generator is primitive") {
    FFContext f(2, ZPoly(2, {1, 1, 0, 0, 1}));
    CHECK(f.element_order(f.gen()) == 15);
    for (std::uint64_t i = 1; i < 16; ++i) CHECK(15 % f.element_order(f.element_at(i)) == 0);
}

TEST_CASE("Gaussian determinant matches Laplace expansion") {
    FFContext f(2, ZPoly(2, {1, 1, 0, 0, 1}));
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::uint64_t> d(0, 15);
    for (std::size_t k = 2; k <= 4; ++k) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<FFElement> flat;
            std::vector<std::vector<FFElement>> rows(k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    FFElement e = f.element_at(d(rng));
                    flat.push_back(e);
                    rows[i].push_back(e);
                }
            CHECK(ff_det(f, flat, k) == laplace_det(f, rows));
        }
    }
}

TEST_CASE("minor scan agrees with direct enumeration") {
    FFContext f(2, ZPoly(2, {1, 1, 0, 0, 1}));
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<std::uint64_t> d(0, 15);
    auto brute = [&](const std::vector<FFElement>& m, std::size_t k) {
        for (std::uint64_t rmask = 1; rmask < (std::uint64_t(1) << k); ++rmask) {
            for (std::uint64_t cmask = 1; cmask < (std::uint64_t(1) << k); ++cmask) {
                std::vector<std::size_t> rows, cols;
                for (std::size_t i = 0; i < k; ++i) {
                    if (rmask & (std::uint64_t(1) << i)) rows.push_back(i);
                    if (cmask & (std::uint64_t(1) << i)) cols.push_back(i);
                }
                if (rows.size() != cols.size()) continue;
                std::vector<FFElement> sub;
                for (auto i : rows)
                    for (auto j : cols) sub.push_back(m[i * k + j]);
                if (ff_det(f, sub, rows.size()).is_zero()) return false;
            }
        }
        return true;
    };
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<FFElement> m;
        for (int i = 0; i < 9; ++i) m.push_back(f.element_at(d(rng)));
        CHECK(ff_matrix_all_minors_nonzero(f, m, 3) == brute(m, 3));
    }
}

TEST_CASE("prime factor lists") {
    CHECK(prime_factors(15) == std::vector<std::uint64_t>{3, 5});
    CHECK(prime_factors(26) == std::vector<std::uint64_t>{2, 13});
    CHECK(prime_factors(64) == std::vector<std::uint64_t>{2});
    CHECK(prime_factors(1).empty());
}
