#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grmds/galois_ring.hpp"

namespace grmds {

/// k x k matrix over one Galois ring, row-major, immutable entries.
class GRMatrix {
public:
    GRMatrix(GRContextPtr ctx, std::size_t order, std::vector<GRElement> entries);

    static GRMatrix identity(const GRContextPtr& ctx, std::size_t order);

    const GRContextPtr& ring() const { return ctx_; }
    std::size_t order() const { return k_; }
    const GRElement& at(std::size_t i, std::size_t j) const { return entries_[i * k_ + j]; }
    const std::vector<GRElement>& entries() const { return entries_; }

    bool operator==(const GRMatrix& o) const {
        return k_ == o.k_ && entries_ == o.entries_;
    }

private:
    GRContextPtr ctx_;
    std::size_t k_;
    std::vector<GRElement> entries_;
};

GRMatrix mat_mul(const GRMatrix& a, const GRMatrix& b);

/// Division-free determinant (dynamic programming over column subsets,
/// O(2^k * k)).  Elimination is unusable here: the ring has zero divisors.
GRElement mat_det(const GRMatrix& a);

/// Row/column index sets of a singular minor.
struct MinorRef {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
};

/// First singular minor in the canonical enumeration (sizes ascending,
/// subsets lexicographic), or nullopt when the matrix is MDS.
std::optional<MinorRef> find_singular_minor(const GRMatrix& a);

bool mat_is_mds_exhaustive(const GRMatrix& a);

enum class MdsMethod { FieldReduction, ExhaustiveFallback };

struct MdsVerdict {
    bool is_mds;
    MdsMethod method;
};

/// Field-reduction check: reduce entry-wise and test all minors over
/// F_{p^m}.  Valid only for all-unit matrices; a non-unit entry triggers
/// the exhaustive fallback, recorded in the verdict's method.
MdsVerdict mat_is_mds_fast(const GRMatrix& a);

bool mat_is_involutory(const GRMatrix& a);

}  // namespace grmds
