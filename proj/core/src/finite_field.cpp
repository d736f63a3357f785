#include "grmds/finite_field.hpp"

#include <algorithm>

#include "grmds/detail/combinations.hpp"
#include "grmds/errors.hpp"

namespace grmds {

namespace {

ZPoly poly_mod(const ZPoly& f, const ZPoly& g) { return divmod(f, g).second; }

ZPoly poly_gcd(ZPoly a, ZPoly b) {
    while (!b.is_zero()) {
        ZPoly r = poly_mod(a, b);
        a = b;
        b = std::move(r);
    }
    return a;
}

ZPoly poly_powmod(ZPoly base, std::uint64_t e, const ZPoly& mod) {
    ZPoly r = ZPoly::one(base.mod());
    base = poly_mod(base, mod);
    while (e) {
        if (e & 1) r = poly_mod(mul(r, base), mod);
        base = poly_mod(mul(base, base), mod);
        e >>= 1;
    }
    return r;
}

std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > (std::uint64_t(1) << 62) / b)
            throw InvalidInputError("field order overflows 64 bits");
        r *= b;
    }
    return r;
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            out.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_irreducible(const ZPoly& g) {
    if (g.degree() < 1) throw InvalidInputError("irreducibility test needs a nonconstant polynomial");
    const std::uint64_t p = g.mod();
    const int n = g.degree();
    // any factor of degree d <= n/2 divides x^{p^d} - x
    ZPoly xp = ZPoly::x(p);
    for (int d = 1; d <= n / 2; ++d) {
        xp = poly_powmod(xp, p, g);
        ZPoly diff = sub(xp, poly_mod(ZPoly::x(p), g));
        if (poly_gcd(g, diff).degree() > 0) return false;
    }
    return true;
}

bool is_primitive(const ZPoly& g) {
    if (!is_irreducible(g)) throw InvalidInputError("primitivity test needs an irreducible polynomial");
    const std::uint64_t p = g.mod();
    const auto m = static_cast<std::uint64_t>(g.degree());
    const std::uint64_t group = checked_pow(p, m) - 1;
    if (poly_powmod(ZPoly::x(p), group, g) != ZPoly::one(p)) return false;
    for (std::uint64_t q : prime_factors(group)) {
        if (poly_powmod(ZPoly::x(p), group / q, g) == ZPoly::one(p)) return false;
    }
    return true;
}

FFContext::FFContext(std::uint64_t p, const ZPoly& modulus) : p_(p) {
    if (modulus.mod() != p)
        throw ContextMismatchError("field modulus polynomial is not over Z_p");
    ZPoly norm = modulus.is_monic() ? modulus : scale(modulus, mod_inv(modulus.leading(), p));
    if (!is_irreducible(norm))
        throw NotBasicIrreducibleError("field modulus is reducible: " + to_string(norm));
    modulus_ = std::move(norm);
    m_ = static_cast<std::uint64_t>(modulus_.degree());
    order_ = checked_pow(p_, m_);
}

FFElement FFContext::one() const {
    auto e = zero();
    e.coeffs[0] = 1;
    return e;
}

FFElement FFContext::gen() const { return from_poly(ZPoly::x(p_)); }

FFElement FFContext::from_poly(const ZPoly& f) const {
    ZPoly r = poly_mod(project(f, p_), modulus_);
    std::vector<std::uint64_t> c(m_, 0);
    for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r.coeff(static_cast<std::size_t>(i));
    return FFElement{std::move(c)};
}

ZPoly FFContext::to_poly(const FFElement& a) const { return ZPoly(p_, a.coeffs); }

FFElement FFContext::element_at(std::uint64_t index) const {
    std::vector<std::uint64_t> c(m_, 0);
    for (std::uint64_t i = 0; i < m_; ++i) {
        c[i] = index % p_;
        index /= p_;
    }
    return FFElement{std::move(c)};
}

std::uint64_t FFContext::encode(const FFElement& a) const {
    std::uint64_t v = 0;
    for (std::uint64_t i = m_; i-- > 0;) v = v * p_ + a.coeffs[i];
    return v;
}

FFElement FFContext::add(const FFElement& a, const FFElement& b) const {
    FFElement r = a;
    for (std::uint64_t i = 0; i < m_; ++i) r.coeffs[i] = (r.coeffs[i] + b.coeffs[i]) % p_;
    return r;
}

FFElement FFContext::sub(const FFElement& a, const FFElement& b) const {
    FFElement r = a;
    for (std::uint64_t i = 0; i < m_; ++i) r.coeffs[i] = (r.coeffs[i] + p_ - b.coeffs[i]) % p_;
    return r;
}

FFElement FFContext::neg(const FFElement& a) const { return sub(zero(), a); }

FFElement FFContext::mul(const FFElement& a, const FFElement& b) const {
    return from_poly(grmds::mul(to_poly(a), to_poly(b)));
}

FFElement FFContext::inv(const FFElement& a) const {
    if (a.is_zero()) throw NotAUnitError("division by zero in the residue field");
    // extended Euclid over Z_p[x]
    ZPoly r0 = modulus_, r1 = to_poly(a);
    ZPoly t0 = ZPoly::zero(p_), t1 = ZPoly::one(p_);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        ZPoly t2 = grmds::sub(t0, grmds::mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant gcd
    std::uint64_t c = mod_inv(r0.coeff(0), p_);
    return from_poly(scale(t0, c));
}

FFElement FFContext::pow(const FFElement& a, std::uint64_t e) const {
    FFElement r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint64_t FFContext::element_order(const FFElement& a) const {
    if (a.is_zero()) throw NotAUnitError("zero has no multiplicative order");
    std::uint64_t o = order_ - 1;
    for (std::uint64_t q : prime_factors(o)) {
        while (o % q == 0 && pow(a, o / q) == one()) o /= q;
    }
    return o;
}

FFElement ff_det(const FFContext& field, const std::vector<FFElement>& entries,
                 std::size_t k) {
    std::vector<FFElement> a = entries;
    auto at = [&](std::size_t i, std::size_t j) -> FFElement& { return a[i * k + j]; };
    FFElement det = field.one();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && at(pivot, col).is_zero()) ++pivot;
        if (pivot == k) return field.zero();
        if (pivot != col) {
            for (std::size_t j = col; j < k; ++j) std::swap(at(pivot, j), at(col, j));
            det = field.neg(det);
        }
        det = field.mul(det, at(col, col));
        FFElement piv_inv = field.inv(at(col, col));
        for (std::size_t i = col + 1; i < k; ++i) {
            if (at(i, col).is_zero()) continue;
            FFElement factor = field.mul(at(i, col), piv_inv);
            for (std::size_t j = col; j < k; ++j)
                at(i, j) = field.sub(at(i, j), field.mul(factor, at(col, j)));
        }
    }
    return det;
}

bool ff_matrix_all_minors_nonzero(const FFContext& field,
                                  const std::vector<FFElement>& entries,
                                  std::size_t k) {
    if (entries.size() != k * k) throw InvalidInputError("matrix is not square");
    for (std::size_t r = 1; r <= k; ++r) {
        bool ok = detail::for_each_combination(k, r, [&](const std::vector<std::size_t>& rows) {
            return detail::for_each_combination(k, r, [&](const std::vector<std::size_t>& cols) {
                std::vector<FFElement> sub;
                sub.reserve(r * r);
                for (auto i : rows)
                    for (auto j : cols) sub.push_back(entries[i * k + j]);
                return !ff_det(field, sub, r).is_zero();
            });
        });
        if (!ok) return false;
    }
    return true;
}

}  // namespace grmds
