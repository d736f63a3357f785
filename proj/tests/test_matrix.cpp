#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace grmds;
using namespace grmds::testutil;

namespace {

GRElement laplace_det(const GRContextPtr& ctx, const GRMatrix& m,
                      std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    GRElement acc = ctx->zero();
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> subcols;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (c != j) subcols.push_back(cols[c]);
        GRElement term = m.at(rows[0], cols[j]) * laplace_det(ctx, m, subrows, subcols);
        acc = j % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

GRElement laplace_det(const GRContextPtr& ctx, const GRMatrix& m) {
    std::vector<std::size_t> idx(m.order());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return laplace_det(ctx, m, idx, idx);
}

}  // namespace

TEST_CASE("constructor validation") {
    auto ctx = ring_4_16();
    CHECK_THROWS_AS(GRMatrix(ctx, 2, {ctx->one()}), InvalidInputError);
    CHECK_THROWS_AS(GRMatrix(ctx, 0, {}), InvalidInputError);
    std::vector<GRElement> mixed{ctx->one(), ctx->one(), ctx->one(), ring_4_256()->one()};
    CHECK_THROWS_AS(GRMatrix(ctx, 2, mixed), ContextMismatchError);
}

TEST_CASE("determinant matches Laplace expansion") {
    auto ctx = ring_4_16();
    std::mt19937_64 rng(41);
    for (std::size_t k = 1; k <= 4; ++k) {
        for (int trial = 0; trial < 40; ++trial) {
            GRMatrix m = random_matrix(ctx, k, rng);
            CHECK(mat_det(m) == laplace_det(ctx, m));
        }
    }
}

TEST_CASE("determinant is multiplicative") {
    auto ctx = ring_9_81();
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        GRMatrix a = random_matrix(ctx, 3, rng), b = random_matrix(ctx, 3, rng);
        CHECK(mat_det(mat_mul(a, b)) == mat_det(a) * mat_det(b));
    }
}

TEST_CASE("identity behaves") {
    auto ctx = ring_4_16();
    GRMatrix id = GRMatrix::identity(ctx, 3);
    CHECK(mat_det(id) == ctx->one());
    CHECK(mat_is_involutory(id));
    std::mt19937_64 rng(43);
    GRMatrix m = random_matrix(ctx, 3, rng);
    CHECK(mat_mul(id, m) == m);
    CHECK(mat_mul(m, id) == m);
}

TEST_CASE("fast and exhaustive MDS verdicts agree on all-unit matrices") {
    std::mt19937_64 rng(44);
    for (auto ctx : {ring_4_16(), ring_9_81()}) {
        for (std::size_t k = 2; k <= 4; ++k) {
            for (int trial = 0; trial < 25; ++trial) {
                GRMatrix m = random_all_unit_matrix(ctx, k, rng);
                MdsVerdict v = mat_is_mds_fast(m);
                CHECK(v.method == MdsMethod::FieldReduction);
                CHECK(v.is_mds == mat_is_mds_exhaustive(m));
            }
        }
    }
}

TEST_CASE("a non-unit entry forces the exhaustive fallback") {
    auto ctx = ring_4_16();
    std::vector<GRElement> e{ctx->constant(2), ctx->one(), ctx->one(), ctx->one()};
    GRMatrix m(ctx, 2, e);
    MdsVerdict v = mat_is_mds_fast(m);
    CHECK(v.method == MdsMethod::ExhaustiveFallback);
    CHECK_FALSE(v.is_mds);
}

TEST_CASE("first singular minor is reported in canonical order") {
    auto ctx = ring_4_16();
    // entry (0,1) is nilpotent, so the 1x1 minor {0}x{1} fails first
    std::vector<GRElement> e{ctx->one(), ctx->constant(2), ctx->one(), ctx->one()};
    GRMatrix m(ctx, 2, e);
    auto minor = find_singular_minor(m);
    REQUIRE(minor.has_value());
    CHECK(minor->rows == std::vector<std::size_t>{0});
    CHECK(minor->cols == std::vector<std::size_t>{1});
}

TEST_CASE("MDS matrices have no singular minor") {
    auto ctx = ring_4_256();
    CauchySpec spec;
    spec.kind = CauchyKind::Type1Sub;
    spec.xs = xi_powers(ctx, 0, 3);
    spec.ys = xi_powers(ctx, 3, 3);
    GRMatrix m = build_cauchy(spec, ctx);
    CHECK_FALSE(find_singular_minor(m).has_value());
    CHECK(mat_is_mds_exhaustive(m));
}

TEST_CASE("singular matrices fail both methods") {
    auto ctx = ring_4_16();
    std::vector<GRElement> e{ctx->one(), ctx->one(), ctx->one(), ctx->one()};
    GRMatrix m(ctx, 2, e);
    CHECK_FALSE(mat_is_mds_exhaustive(m));
    CHECK_FALSE(mat_is_mds_fast(m).is_mds);
    auto minor = find_singular_minor(m);
    REQUIRE(minor.has_value());
    CHECK(minor->rows.size() == 2);
}
