#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grmds/finite_field.hpp"
#include "grmds/zmod.hpp"

namespace grmds {

class GRContext;
using GRContextPtr = std::shared_ptr<const GRContext>;

enum class ElementClass { Unit, Nilpotent };

/// Element of GR(p^s, p^{sm}): coefficients of length m over Z_{p^s},
/// ascending powers of the class of x.  Immutable; all operations are pure.
class GRElement {
public:
    GRElement() = default;
    GRElement(GRContextPtr ctx, std::vector<std::uint64_t> coeffs);

    const GRContextPtr& ring() const { return ctx_; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    GRElement operator+(const GRElement& o) const;
    GRElement operator-(const GRElement& o) const;
    GRElement operator*(const GRElement& o) const;
    GRElement operator-() const;
    GRElement pow(std::uint64_t e) const;
    GRElement inv() const;

    FFElement reduce() const;         // mu~ into the residue field
    ElementClass classify() const;    // unit iff reduce() != 0
    bool is_unit() const { return classify() == ElementClass::Unit; }
    GRElement frobenius() const;      // digit-wise p-th power
    std::uint64_t order() const;      // least d > 0 with a^d = 1

    /// Same ring and same coefficients.  Elements of structurally different
    /// rings are never equal.
    bool operator==(const GRElement& o) const;
    bool operator!=(const GRElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    GRContextPtr ctx_;
    std::vector<std::uint64_t> coeffs_;
};

/// p-adic digit decomposition a = sum p^i * digits[i], each digit in tau.
struct PAdicDigits {
    std::vector<GRElement> digits;
};

/// Immutable descriptor of one Galois ring GR(p^s, p^{sm}).
/// The Teichmuller generator xi, the set tau and the digit-match map are all
/// built eagerly in make(); everything is shareable across threads.
class GRContext : public std::enable_shared_from_this<GRContext> {
public:
    /// Validates p prime, normalizes the modulus monic, checks basic
    /// irreducibility and computes xi / tau.  Throws NotBasicIrreducibleError
    /// when the mod-p projection of the modulus is reducible.
    static GRContextPtr make(std::uint64_t p, std::uint64_t s, const ZPoly& modulus);

    std::uint64_t p() const { return p_; }
    std::uint64_t s() const { return s_; }
    std::uint64_t m() const { return m_; }
    std::uint64_t char_mod() const { return ps_; }         // p^s
    std::uint64_t field_order() const { return pm_; }      // p^m
    std::uint64_t element_count() const { return card_; }  // p^{sm}
    std::uint64_t unit_count() const;                      // p^{(s-1)m}(p^m - 1)
    std::uint64_t nilpotent_count() const;                 // p^{(s-1)m}

    const ZPoly& modulus() const { return modulus_; }            // normalized monic
    const ZPoly& supplied_modulus() const { return supplied_; }  // as given
    bool is_basic_primitive() const { return basic_primitive_; }
    const FFContext& residue_field() const { return field_; }

    GRElement zero() const;
    GRElement one() const;
    GRElement constant(std::uint64_t c) const;
    GRElement from_coeffs(std::vector<std::uint64_t> c) const;
    GRElement from_poly(const ZPoly& f) const;
    GRElement gen() const;  // class of x
    GRElement element_at(std::uint64_t index) const;  // mixed-radix enumeration

    bool has_xi() const { return xi_.has_value(); }
    /// Teichmuller generator: order exactly p^m - 1.
    const GRElement& xi() const;
    /// xi^e with e taken modulo p^m - 1 (negative exponents allowed).
    GRElement xi_pow(std::int64_t e) const;
    /// tau = [0, 1, xi, xi^2, ..., xi^{p^m - 2}], in that order.
    const std::vector<GRElement>& teichmuller_set() const;
    /// Index into tau of the unique member congruent to the given residue
    /// field element.
    std::size_t tau_index(const FFElement& reduced) const;
    /// Teichmuller exponent of a unit a: e with tau-member xi^e ~ a mod (p),
    /// i.e. the discrete log of the reduction.  Throws for nilpotents.
    std::int64_t teichmuller_exponent(const GRElement& a) const;

    PAdicDigits padic_decompose(const GRElement& a) const;
    GRElement padic_recompose(const PAdicDigits& digits) const;

    /// Structural interchangeability: same (p, s, normalized modulus).
    bool same_ring(const GRContext& o) const {
        return p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_;
    }

private:
    friend class GRElement;
    GRContext(std::uint64_t p, std::uint64_t s, ZPoly modulus, ZPoly supplied);

    std::vector<std::uint64_t> reduce_poly(std::vector<std::uint64_t> c) const;

    std::uint64_t p_, s_, m_, ps_, pm_, card_;
    ZPoly modulus_;
    ZPoly supplied_;
    bool basic_primitive_ = false;
    FFContext field_;
    std::optional<GRElement> xi_;
    std::vector<GRElement> tau_;
    std::unordered_map<std::uint64_t, std::size_t> tau_by_reduction_;
};

}  // namespace grmds
