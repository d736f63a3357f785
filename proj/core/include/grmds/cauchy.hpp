#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grmds/matrix.hpp"

namespace grmds {

enum class CauchyKind {
    Type1Sub,             // 1/(x_i - y_j), x, y in tau \ {0}
    SecondKind,           // 1/(x_i + y_j), x, y in tau' \ {0}, p odd
    Type2NilShift,        // 1/(x_i + x_j + l), l nilpotent, p odd
    Char2SecondKind,      // 1/(x_i + y_j), p = 2, s >= 2, x, y in tau \ {0}
    ExponentConstrained,  // 1/(xi^{sigma_i} + xi^{eta_j}), p odd
    Generalized,          // w_i v_j / (x_i - y_j)
};

const char* to_string(CauchyKind kind);
std::optional<CauchyKind> cauchy_kind_from_string(const std::string& s);

struct CauchySpec {
    CauchyKind kind = CauchyKind::Type1Sub;
    std::vector<GRElement> xs;
    std::vector<GRElement> ys;                   // absent for Type2NilShift
    std::optional<GRElement> nilpotent_shift;    // l of Type2NilShift
    std::vector<GRElement> row_units;            // w_i of Generalized
    std::vector<GRElement> col_units;            // v_j of Generalized
    std::vector<std::uint64_t> sigma;            // ExponentConstrained
    std::vector<std::uint64_t> eta;
};

/// tau' = [0, 1, xi, ..., xi^B] with B = (p^m - 3)/2; requires p odd.
/// Pairwise sums inside tau' \ {0} are units, which is what the second-kind
/// constructions need.
std::vector<GRElement> tau_prime(const GRContextPtr& ctx);

/// Largest xi exponent admitted in tau'.
std::uint64_t tau_prime_bound(const GRContextPtr& ctx);

/// Checks every hypothesis of the selected construction.  All pairwise unit
/// conditions are checked before any inversion; the thrown
/// ConstructionRejectedError names every offending pair (e.g. "x2 + y3").
/// Membership conditions (tau / tau', parity, nilpotency) are checked after.
void validate_cauchy(const CauchySpec& spec, const GRContextPtr& ctx);

GRMatrix build_cauchy(const CauchySpec& spec, const GRContextPtr& ctx);

/// Determinant from the closed product formula, never from minors.
GRElement cauchy_det_closed_form(const CauchySpec& spec, const GRContextPtr& ctx);

/// Off-diagonal entry a12 = 2/((2 x1 + l)(2 x2 + l)) of the square of the
/// 2 x 2 shifted construction; always a unit, so the square is never the
/// identity.
GRElement type2_involution_witness(const GRElement& x1, const GRElement& x2,
                                   const GRElement& l, const GRContextPtr& ctx);

/// First k powers of xi starting at xi^start: [xi^start, ..., xi^{start+k-1}].
std::vector<GRElement> xi_powers(const GRContextPtr& ctx, std::uint64_t start, std::size_t k);

}  // namespace grmds
