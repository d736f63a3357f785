#include "grmds/matrix.hpp"

#include <bit>

#include "grmds/detail/combinations.hpp"
#include "grmds/errors.hpp"

namespace grmds {

GRMatrix::GRMatrix(GRContextPtr ctx, std::size_t order, std::vector<GRElement> entries)
    : ctx_(std::move(ctx)), k_(order) {
    if (k_ < 1) throw InvalidInputError("matrix order must be at least 1");
    if (entries.size() != k_ * k_) throw InvalidInputError("entry count does not match order");
    for (const auto& e : entries)
        if (!e.ring() || !e.ring()->same_ring(*ctx_))
            throw ContextMismatchError("matrix entry belongs to a different ring");
    entries_ = std::move(entries);
}

GRMatrix GRMatrix::identity(const GRContextPtr& ctx, std::size_t order) {
    std::vector<GRElement> e;
    e.reserve(order * order);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) e.push_back(i == j ? ctx->one() : ctx->zero());
    return GRMatrix(ctx, order, std::move(e));
}

GRMatrix mat_mul(const GRMatrix& a, const GRMatrix& b) {
    if (!a.ring()->same_ring(*b.ring()))
        throw InvalidInputError("matrix product across different rings");
    if (a.order() != b.order()) throw InvalidInputError("matrix orders differ");
    const std::size_t k = a.order();
    std::vector<GRElement> out;
    out.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            GRElement acc = a.ring()->zero();
            for (std::size_t l = 0; l < k; ++l) acc = acc + a.at(i, l) * b.at(l, j);
            out.push_back(std::move(acc));
        }
    }
    return GRMatrix(a.ring(), k, std::move(out));
}

namespace {

// det of the submatrix given by `rows` x `cols`; subset DP over columns.
GRElement det_of(const GRMatrix& a, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
    const std::size_t r = rows.size();
    const auto& ctx = a.ring();
    if (r == 0) return ctx->one();
    // dp[mask] = det of the first popcount(mask) rows against column subset mask
    std::vector<GRElement> dp(std::size_t(1) << r);
    dp[0] = ctx->one();
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << r); ++mask) {
        std::size_t row = static_cast<std::size_t>(std::popcount(mask)) - 1;
        GRElement acc = ctx->zero();
        bool plus = true;
        // iterate set bits from high to low so the cofactor sign alternates
        for (int j = static_cast<int>(r) - 1; j >= 0; --j) {
            if (!(mask & (std::uint32_t(1) << j))) continue;
            const GRElement& entry = a.at(rows[row], cols[static_cast<std::size_t>(j)]);
            GRElement term = entry * dp[mask & ~(std::uint32_t(1) << j)];
            acc = plus ? acc + term : acc - term;
            plus = !plus;
        }
        dp[mask] = std::move(acc);
    }
    return dp[(std::size_t(1) << r) - 1];
}

}  // namespace

GRElement mat_det(const GRMatrix& a) {
    const std::size_t k = a.order();
    if (k > 24) throw InvalidInputError("determinant order too large for subset DP");
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return det_of(a, idx, idx);
}

std::optional<MinorRef> find_singular_minor(const GRMatrix& a) {
    const std::size_t k = a.order();
    std::optional<MinorRef> found;
    for (std::size_t r = 1; r <= k && !found; ++r) {
        detail::for_each_combination(k, r, [&](const std::vector<std::size_t>& rows) {
            return detail::for_each_combination(k, r, [&](const std::vector<std::size_t>& cols) {
                if (det_of(a, rows, cols).is_unit()) return true;
                found = MinorRef{rows, cols};
                return false;
            });
        });
    }
    return found;
}

bool mat_is_mds_exhaustive(const GRMatrix& a) { return !find_singular_minor(a).has_value(); }

MdsVerdict mat_is_mds_fast(const GRMatrix& a) {
    for (const auto& e : a.entries()) {
        if (!e.is_unit()) return MdsVerdict{mat_is_mds_exhaustive(a), MdsMethod::ExhaustiveFallback};
    }
    const FFContext& field = a.ring()->residue_field();
    std::vector<FFElement> reduced;
    reduced.reserve(a.entries().size());
    for (const auto& e : a.entries()) reduced.push_back(e.reduce());
    return MdsVerdict{ff_matrix_all_minors_nonzero(field, reduced, a.order()),
                      MdsMethod::FieldReduction};
}

bool mat_is_involutory(const GRMatrix& a) {
    return mat_mul(a, a) == GRMatrix::identity(a.ring(), a.order());
}

}  // namespace grmds
