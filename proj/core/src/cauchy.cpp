#include "grmds/cauchy.hpp"

#include <sstream>

#include "grmds/errors.hpp"

namespace grmds {

const char* to_string(CauchyKind kind) {
    switch (kind) {
        case CauchyKind::Type1Sub: return "type1_sub";
        case CauchyKind::SecondKind: return "second_kind";
        case CauchyKind::Type2NilShift: return "type2_nilshift";
        case CauchyKind::Char2SecondKind: return "char2_second_kind";
        case CauchyKind::ExponentConstrained: return "exponent_constrained";
        case CauchyKind::Generalized: return "generalized";
    }
    return "?";
}

std::optional<CauchyKind> cauchy_kind_from_string(const std::string& s) {
    for (CauchyKind k : {CauchyKind::Type1Sub, CauchyKind::SecondKind, CauchyKind::Type2NilShift,
                         CauchyKind::Char2SecondKind, CauchyKind::ExponentConstrained,
                         CauchyKind::Generalized}) {
        if (s == to_string(k)) return k;
    }
    return std::nullopt;
}

std::uint64_t tau_prime_bound(const GRContextPtr& ctx) {
    if (ctx->p() == 2) throw InvalidInputError("tau' is only defined for odd characteristic");
    // 1 + xi^d is a non-unit exactly when d = (p^m - 1)/2, so the exponent
    // bound must stay strictly below it.
    return (ctx->field_order() - 3) / 2;
}

std::vector<GRElement> tau_prime(const GRContextPtr& ctx) {
    std::uint64_t bound = tau_prime_bound(ctx);
    std::vector<GRElement> out;
    out.reserve(bound + 2);
    out.push_back(ctx->zero());
    for (std::uint64_t e = 0; e <= bound; ++e) out.push_back(ctx->xi_pow(static_cast<std::int64_t>(e)));
    return out;
}

std::vector<GRElement> xi_powers(const GRContextPtr& ctx, std::uint64_t start, std::size_t k) {
    std::vector<GRElement> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(ctx->xi_pow(static_cast<std::int64_t>(start + i)));
    return out;
}

namespace {

struct SpecShape {
    std::vector<GRElement> xs;
    std::vector<GRElement> ys;  // effective ys (derived for the shifted kind)
    bool subtractive;           // denominator x - y vs x + y
};

bool in_tau_nonzero(const GRContextPtr& ctx, const GRElement& a) {
    if (!a.is_unit()) return false;
    const auto& tau = ctx->teichmuller_set();
    return a == tau[ctx->tau_index(a.reduce())];
}

bool in_tau_prime_nonzero(const GRContextPtr& ctx, const GRElement& a) {
    if (!in_tau_nonzero(ctx, a)) return false;
    auto e = static_cast<std::uint64_t>(ctx->teichmuller_exponent(a));
    return e <= tau_prime_bound(ctx);
}

SpecShape effective_shape(const CauchySpec& spec, const GRContextPtr& ctx) {
    SpecShape sh;
    if (spec.kind == CauchyKind::ExponentConstrained) {
        if (spec.sigma.empty() || spec.sigma.size() != spec.eta.size())
            throw ConstructionRejectedError(
                "exponent_constrained needs equally many sigma and eta exponents");
        for (auto e : spec.sigma) sh.xs.push_back(ctx->xi_pow(static_cast<std::int64_t>(e)));
        for (auto e : spec.eta) sh.ys.push_back(ctx->xi_pow(static_cast<std::int64_t>(e)));
    } else {
        sh.xs = spec.xs;
        sh.ys = spec.ys;
    }
    if (spec.kind == CauchyKind::Type2NilShift) {
        if (!spec.nilpotent_shift)
            throw ConstructionRejectedError("type2_nilshift requires the nilpotent shift l");
        sh.ys.clear();
        for (const auto& x : sh.xs) sh.ys.push_back(x + *spec.nilpotent_shift);
    }
    sh.subtractive =
        spec.kind == CauchyKind::Type1Sub || spec.kind == CauchyKind::Generalized;
    return sh;
}

std::string pair_name(const char* a, std::size_t i, char op, const char* b, std::size_t j) {
    std::ostringstream os;
    os << a << (i + 1) << " " << op << " " << b << (j + 1);
    return os.str();
}

void check_ring(const GRContextPtr& ctx, const GRElement& e, const char* what) {
    if (!e.ring() || !e.ring()->same_ring(*ctx))
        throw ContextMismatchError(std::string(what) + " belongs to a different ring");
}

}  // namespace

void validate_cauchy(const CauchySpec& spec, const GRContextPtr& ctx) {
    SpecShape sh = effective_shape(spec, ctx);
    const std::size_t k = sh.xs.size();
    if (k == 0) throw ConstructionRejectedError("empty x sequence");
    if (sh.ys.size() != k)
        throw ConstructionRejectedError("x and y sequences have different lengths");
    for (const auto& e : sh.xs) check_ring(ctx, e, "x entry");
    for (const auto& e : sh.ys) check_ring(ctx, e, "y entry");
    if (spec.nilpotent_shift) check_ring(ctx, *spec.nilpotent_shift, "shift l");

    // The exponent rule is this kind's defining hypothesis, so it is checked
    // before the derived pairwise unit conditions.
    if (spec.kind == CauchyKind::ExponentConstrained) {
        if (ctx->p() == 2)
            throw ConstructionRejectedError("exponent_constrained needs odd characteristic");
        const std::uint64_t group = ctx->field_order() - 1;
        const std::uint64_t half = group / 2;
        std::vector<std::pair<std::string, std::uint64_t>> exps;
        for (std::size_t i = 0; i < spec.sigma.size(); ++i)
            exps.emplace_back("sigma" + std::to_string(i + 1), spec.sigma[i]);
        for (std::size_t j = 0; j < spec.eta.size(); ++j)
            exps.emplace_back("eta" + std::to_string(j + 1), spec.eta[j]);
        for (const auto& [name, e] : exps)
            if (e < 1 || e > group - 1)
                throw ConstructionRejectedError(name + " is out of range [1, p^m - 2]");
        // x + y fails to be a unit exactly when the exponent gap is half the
        // group order, in either direction; check the whole multiset.
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (std::size_t j = 0; j < exps.size(); ++j) {
                if (i == j) continue;
                if ((exps[i].second + group - exps[j].second) % group == half)
                    throw ConstructionRejectedError(
                        "construction rejected: " + exps[i].first + " - " + exps[j].first +
                        " equals (p^m - 1)/2");
            }
    }

    // Stage 1: every pairwise unit condition of the determinant formula,
    // reported together so diagnostics can name the exact offending pair.
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            if (!(sh.xs[i] - sh.xs[j]).is_unit())
                bad.push_back(pair_name("x", i, '-', "x", j) + " is not a unit");
            if (!(sh.ys[i] - sh.ys[j]).is_unit())
                bad.push_back(pair_name("y", i, '-', "y", j) + " is not a unit");
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (spec.kind == CauchyKind::Type2NilShift) {
                GRElement den = sh.xs[i] + sh.xs[j] + *spec.nilpotent_shift;
                if (!den.is_unit())
                    bad.push_back(pair_name("x", i, '+', "x", j) + " + l is not a unit (value " +
                                  den.str() + ")");
            } else {
                GRElement den = sh.subtractive ? sh.xs[i] - sh.ys[j] : sh.xs[i] + sh.ys[j];
                if (!den.is_unit())
                    bad.push_back(pair_name("x", i, sh.subtractive ? '-' : '+', "y", j) +
                                  " is not a unit (value " + den.str() + ")");
            }
        }
    if (!bad.empty()) {
        std::string msg = "construction rejected: ";
        for (std::size_t i = 0; i < bad.size(); ++i) {
            if (i) msg += "; ";
            msg += bad[i];
        }
        throw ConstructionRejectedError(msg);
    }

    // Stage 2: the selected construction's membership hypotheses.
    switch (spec.kind) {
        case CauchyKind::Type1Sub:
        case CauchyKind::Generalized:
            for (std::size_t i = 0; i < k; ++i) {
                if (!in_tau_nonzero(ctx, sh.xs[i]))
                    throw ConstructionRejectedError("x" + std::to_string(i + 1) +
                                                    " is not in tau \\ {0}");
                if (!in_tau_nonzero(ctx, sh.ys[i]))
                    throw ConstructionRejectedError("y" + std::to_string(i + 1) +
                                                    " is not in tau \\ {0}");
            }
            break;
        case CauchyKind::Char2SecondKind:
            if (ctx->p() != 2 || ctx->s() < 2)
                throw ConstructionRejectedError(
                    "char2_second_kind needs characteristic 2^s with s >= 2");
            for (std::size_t i = 0; i < k; ++i) {
                if (!in_tau_nonzero(ctx, sh.xs[i]) || !in_tau_nonzero(ctx, sh.ys[i]))
                    throw ConstructionRejectedError("entries must come from tau \\ {0}");
            }
            break;
        case CauchyKind::SecondKind:
        case CauchyKind::Type2NilShift: {
            if (ctx->p() == 2)
                throw ConstructionRejectedError(to_string(spec.kind) +
                                                std::string(" needs odd characteristic"));
            for (std::size_t i = 0; i < k; ++i) {
                if (!in_tau_prime_nonzero(ctx, sh.xs[i]))
                    throw ConstructionRejectedError("x" + std::to_string(i + 1) +
                                                    " is not in tau' \\ {0}");
            }
            if (spec.kind == CauchyKind::SecondKind) {
                for (std::size_t j = 0; j < k; ++j) {
                    if (!in_tau_prime_nonzero(ctx, sh.ys[j]))
                        throw ConstructionRejectedError("y" + std::to_string(j + 1) +
                                                        " is not in tau' \\ {0}");
                    for (std::size_t i = 0; i < k; ++i)
                        if (sh.ys[j] == sh.xs[i])
                            throw ConstructionRejectedError("y" + std::to_string(j + 1) +
                                                            " coincides with x" +
                                                            std::to_string(i + 1));
                }
            } else if (spec.nilpotent_shift->is_unit()) {
                throw ConstructionRejectedError("shift l is not nilpotent");
            }
            break;
        }
        case CauchyKind::ExponentConstrained:
            break;  // handled above, ahead of the unit conditions
    }

    if (spec.kind == CauchyKind::Generalized) {
        if (spec.row_units.size() != k || spec.col_units.size() != k)
            throw ConstructionRejectedError("generalized kind needs k row and k column units");
        for (std::size_t i = 0; i < k; ++i) {
            check_ring(ctx, spec.row_units[i], "row unit");
            check_ring(ctx, spec.col_units[i], "column unit");
            if (!spec.row_units[i].is_unit())
                throw ConstructionRejectedError("w" + std::to_string(i + 1) + " is not a unit");
            if (!spec.col_units[i].is_unit())
                throw ConstructionRejectedError("v" + std::to_string(i + 1) + " is not a unit");
        }
    }
}

GRMatrix build_cauchy(const CauchySpec& spec, const GRContextPtr& ctx) {
    validate_cauchy(spec, ctx);
    SpecShape sh = effective_shape(spec, ctx);
    const std::size_t k = sh.xs.size();
    std::vector<GRElement> entries;
    entries.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            GRElement den = sh.subtractive ? sh.xs[i] - sh.ys[j] : sh.xs[i] + sh.ys[j];
            GRElement e = den.inv();
            if (spec.kind == CauchyKind::Generalized)
                e = spec.row_units[i] * spec.col_units[j] * e;
            entries.push_back(std::move(e));
        }
    }
    return GRMatrix(ctx, k, std::move(entries));
}

GRElement cauchy_det_closed_form(const CauchySpec& spec, const GRContextPtr& ctx) {
    validate_cauchy(spec, ctx);
    SpecShape sh = effective_shape(spec, ctx);
    const std::size_t k = sh.xs.size();
    GRElement num = ctx->one();
    for (std::size_t i = 1; i < k; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            num = num * (sh.xs[i] - sh.xs[j]);
            // first kind uses (y_j - y_i), second kind (y_i - y_j)
            num = num * (sh.subtractive ? sh.ys[j] - sh.ys[i] : sh.ys[i] - sh.ys[j]);
        }
    }
    GRElement den = ctx->one();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            den = den * (sh.subtractive ? sh.xs[i] - sh.ys[j] : sh.xs[i] + sh.ys[j]);
    GRElement det = num * den.inv();
    if (spec.kind == CauchyKind::Generalized) {
        for (std::size_t i = 0; i < k; ++i)
            det = det * spec.row_units[i] * spec.col_units[i];
    }
    return det;
}

GRElement type2_involution_witness(const GRElement& x1, const GRElement& x2,
                                   const GRElement& l, const GRContextPtr& ctx) {
    if (ctx->p() == 2) throw InvalidInputError("witness needs odd characteristic");
    check_ring(ctx, x1, "x1");
    check_ring(ctx, x2, "x2");
    check_ring(ctx, l, "l");
    if (x1 == x2) throw InvalidInputError("x1 and x2 must differ");
    if (!in_tau_prime_nonzero(ctx, x1) || !in_tau_prime_nonzero(ctx, x2))
        throw InvalidInputError("x1, x2 must come from tau' \\ {0}");
    if (l.is_unit()) throw InvalidInputError("l is not nilpotent");
    GRElement two = ctx->constant(2);
    GRElement den = (two * x1 + l) * (two * x2 + l);
    return two * den.inv();
}

}  // namespace grmds
