#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "grmds/cauchy.hpp"

namespace grmds::testutil {

// The rings exercised throughout the suite.
inline GRContextPtr ring_4_16() { return GRContext::make(2, 2, ZPoly(4, {1, 1, 1})); }
inline GRContextPtr ring_4_256() { return GRContext::make(2, 2, ZPoly(4, {1, 3, 2, 0, 1})); }
inline GRContextPtr ring_9_81() { return GRContext::make(3, 2, ZPoly(9, {4, 2, 5})); }
inline GRContextPtr ring_9_729() { return GRContext::make(3, 2, ZPoly(9, {4, 2, 3, 1})); }
inline GRContextPtr ring_2_8() { return GRContext::make(2, 1, ZPoly(2, {1, 1, 0, 1})); }
inline GRContextPtr ring_f16() { return GRContext::make(2, 1, ZPoly(2, {1, 1, 0, 0, 1})); }

inline GRElement random_element(const GRContextPtr& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> d(0, ctx->element_count() - 1);
    return ctx->element_at(d(rng));
}

inline GRElement random_unit(const GRContextPtr& ctx, std::mt19937_64& rng) {
    for (;;) {
        GRElement e = random_element(ctx, rng);
        if (e.is_unit()) return e;
    }
}

inline GRElement random_nilpotent(const GRContextPtr& ctx, std::mt19937_64& rng) {
    return ctx->constant(ctx->p()) * random_element(ctx, rng);
}

inline GRMatrix random_all_unit_matrix(const GRContextPtr& ctx, std::size_t k,
                                       std::mt19937_64& rng) {
    std::vector<GRElement> e;
    e.reserve(k * k);
    for (std::size_t i = 0; i < k * k; ++i) e.push_back(random_unit(ctx, rng));
    return GRMatrix(ctx, k, std::move(e));
}

inline GRMatrix random_matrix(const GRContextPtr& ctx, std::size_t k, std::mt19937_64& rng) {
    std::vector<GRElement> e;
    e.reserve(k * k);
    for (std::size_t i = 0; i < k * k; ++i) e.push_back(random_element(ctx, rng));
    return GRMatrix(ctx, k, std::move(e));
}

/// Distinct exponents drawn uniformly from [lo, hi].
inline std::vector<std::uint64_t> distinct_exponents(std::uint64_t lo, std::uint64_t hi,
                                                     std::size_t count, std::mt19937_64& rng) {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t e = lo; e <= hi; ++e) pool.push_back(e);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(count);
    return pool;
}

inline std::vector<GRElement> elements_of(const GRContextPtr& ctx,
                                          const std::vector<std::uint64_t>& exps) {
    std::vector<GRElement> out;
    out.reserve(exps.size());
    for (auto e : exps) out.push_back(ctx->xi_pow(static_cast<std::int64_t>(e)));
    return out;
}

/// Random valid construction parameters for each kind, orders 2..4.
inline CauchySpec random_spec(CauchyKind kind, const GRContextPtr& ctx, std::size_t k,
                              std::mt19937_64& rng) {
    CauchySpec spec;
    spec.kind = kind;
    const std::uint64_t top = ctx->field_order() - 2;
    switch (kind) {
        case CauchyKind::Type1Sub:
        case CauchyKind::Generalized:
        case CauchyKind::Char2SecondKind: {
            auto exps = distinct_exponents(0, top, 2 * k, rng);
            spec.xs = elements_of(ctx, {exps.begin(), exps.begin() + static_cast<long>(k)});
            spec.ys = elements_of(ctx, {exps.begin() + static_cast<long>(k), exps.end()});
            if (kind == CauchyKind::Generalized) {
                for (std::size_t i = 0; i < k; ++i) {
                    spec.row_units.push_back(random_unit(ctx, rng));
                    spec.col_units.push_back(random_unit(ctx, rng));
                }
            }
            break;
        }
        case CauchyKind::SecondKind: {
            auto exps = distinct_exponents(0, tau_prime_bound(ctx), 2 * k, rng);
            spec.xs = elements_of(ctx, {exps.begin(), exps.begin() + static_cast<long>(k)});
            spec.ys = elements_of(ctx, {exps.begin() + static_cast<long>(k), exps.end()});
            break;
        }
        case CauchyKind::Type2NilShift: {
            spec.xs = elements_of(ctx, distinct_exponents(0, tau_prime_bound(ctx), k, rng));
            spec.nilpotent_shift = random_nilpotent(ctx, rng);
            break;
        }
        case CauchyKind::ExponentConstrained: {
            const std::uint64_t group = ctx->field_order() - 1;
            const std::uint64_t half = group / 2;
            for (;;) {
                auto exps = distinct_exponents(1, top, 2 * k, rng);
                bool ok = true;
                for (std::size_t i = 0; i < exps.size() && ok; ++i)
                    for (std::size_t j = 0; j < exps.size() && ok; ++j)
                        if (i != j && (exps[i] + group - exps[j]) % group == half) ok = false;
                if (!ok) continue;
                spec.sigma.assign(exps.begin(), exps.begin() + static_cast<long>(k));
                spec.eta.assign(exps.begin() + static_cast<long>(k), exps.end());
                break;
            }
            break;
        }
    }
    return spec;
}

}  // namespace grmds::testutil
