#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "grmds/errors.hpp"

namespace grmds {

/// Canonical residue modulo p^s.  The modulus travels with the value so that
/// mixing residues from different rings is caught instead of silently wrapping.
struct Residue {
    std::uint64_t value = 0;
    std::uint64_t mod = 0;

    bool operator==(const Residue&) const = default;
};

// Moduli are limited to 2^31 so that products fit in 64 bits exactly.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t(1) << 31;

Residue make_residue(std::int64_t v, std::uint64_t mod);

Residue add(Residue a, Residue b);
Residue sub(Residue a, Residue b);
Residue mul(Residue a, Residue b);
Residue neg(Residue a);

/// Multiplicative inverse; throws NotAUnitError when gcd(a, mod) > 1.
Residue inv(Residue a);

/// mu: Z_{p^s} -> Z_p.
Residue project(Residue a, std::uint64_t p);

bool is_unit(Residue a, std::uint64_t p);

// Raw helpers used throughout the library where the modulus is held by a
// surrounding context rather than per value.
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t mod);
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t mod);

/// Polynomial over Z_{p^s}, ascending coefficients, trailing zeros trimmed.
/// The zero polynomial has an empty coefficient sequence and degree -1.
class ZPoly {
public:
    ZPoly() = default;
    ZPoly(std::uint64_t mod, std::vector<std::uint64_t> coeffs);

    static ZPoly zero(std::uint64_t mod) { return ZPoly(mod, {}); }
    static ZPoly one(std::uint64_t mod) { return ZPoly(mod, {1}); }
    static ZPoly x(std::uint64_t mod) { return ZPoly(mod, {0, 1}); }
    static ZPoly constant(std::uint64_t mod, std::uint64_t c) { return ZPoly(mod, {c}); }

    std::uint64_t mod() const { return mod_; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const { return leading() == 1; }

    bool operator==(const ZPoly&) const = default;

private:
    std::uint64_t mod_ = 0;
    std::vector<std::uint64_t> coeffs_;
};

ZPoly add(const ZPoly& f, const ZPoly& g);
ZPoly sub(const ZPoly& f, const ZPoly& g);
ZPoly mul(const ZPoly& f, const ZPoly& g);
ZPoly scale(const ZPoly& f, std::uint64_t c);

/// Euclidean division by a divisor with unit leading coefficient.  A non-monic
/// unit-lead divisor is normalized first; a non-unit lead throws
/// InvalidInputError.  Returns (q, r) with f = q*g + r and deg r < deg g.
std::pair<ZPoly, ZPoly> divmod(const ZPoly& f, const ZPoly& g);

/// Coefficient-wise mu: Z_{p^s}[x] -> Z_p[x]; the degree may drop.
ZPoly project(const ZPoly& f, std::uint64_t p);

std::string to_string(const ZPoly& f, const char* var = "x");

}  // namespace grmds
