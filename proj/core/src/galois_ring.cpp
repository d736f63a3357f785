#include "grmds/galois_ring.hpp"

#include <algorithm>

#include "grmds/errors.hpp"

namespace grmds {

namespace {

constexpr std::uint64_t kMaxTauSize = std::uint64_t(1) << 20;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t checked_pow(std::uint64_t b, std::uint64_t e, const char* what) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (b != 0 && r > ~std::uint64_t(0) / b)
            throw InvalidInputError(std::string(what) + " overflows 64 bits");
        r *= b;
    }
    return r;
}

}  // namespace

GRElement::GRElement(GRContextPtr ctx, std::vector<std::uint64_t> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ctx_->m())
        throw InvalidInputError("element coefficient count does not match the ring degree");
    for (auto& c : coeffs_) c %= ctx_->char_mod();
}

bool GRElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

bool GRElement::operator==(const GRElement& o) const {
    if (!ctx_ || !o.ctx_) return ctx_ == o.ctx_ && coeffs_ == o.coeffs_;
    return ctx_->same_ring(*o.ctx_) && coeffs_ == o.coeffs_;
}

namespace {
void check_same_ring(const GRElement& a, const GRElement& b) {
    if (!a.ring() || !b.ring() || !a.ring()->same_ring(*b.ring()))
        throw ContextMismatchError("elements belong to different Galois rings");
}
}  // namespace

GRElement GRElement::operator+(const GRElement& o) const {
    check_same_ring(*this, o);
    std::vector<std::uint64_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (coeffs_[i] + o.coeffs_[i]) % ctx_->char_mod();
    return GRElement(ctx_, std::move(c));
}

GRElement GRElement::operator-(const GRElement& o) const {
    check_same_ring(*this, o);
    std::vector<std::uint64_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (coeffs_[i] + ctx_->char_mod() - o.coeffs_[i]) % ctx_->char_mod();
    return GRElement(ctx_, std::move(c));
}

GRElement GRElement::operator-() const { return ctx_->zero() - *this; }

GRElement GRElement::operator*(const GRElement& o) const {
    check_same_ring(*this, o);
    const std::uint64_t ps = ctx_->char_mod();
    const std::size_t m = coeffs_.size();
    std::vector<std::uint64_t> prod(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + coeffs_[i] * o.coeffs_[j]) % ps;
    }
    return GRElement(ctx_, ctx_->reduce_poly(std::move(prod)));
}

GRElement GRElement::pow(std::uint64_t e) const {
    GRElement r = ctx_->one(), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FFElement GRElement::reduce() const {
    std::vector<std::uint64_t> c(coeffs_);
    for (auto& v : c) v %= ctx_->p();
    return FFElement{std::move(c)};
}

ElementClass GRElement::classify() const {
    return reduce().is_zero() ? ElementClass::Nilpotent : ElementClass::Unit;
}

GRElement GRElement::inv() const {
    if (!is_unit()) throw NotAUnitError("cannot invert a nilpotent element");
    const FFContext& field = ctx_->residue_field();
    FFElement binv = field.inv(reduce());
    // lift the field inverse, then Newton-refine b <- b*(2 - a*b)
    GRElement b(ctx_, binv.coeffs);
    GRElement two = ctx_->constant(2);
    for (std::uint64_t it = 0; it <= ctx_->s() + 2; ++it) {
        GRElement ab = *this * b;
        if (ab == ctx_->one()) return b;
        b = b * (two - ab);
    }
    throw Error("inverse refinement failed to converge");  // unreachable for valid rings
}

GRElement GRElement::frobenius() const {
    PAdicDigits d = ctx_->padic_decompose(*this);
    for (auto& digit : d.digits) digit = digit.pow(ctx_->p());
    return ctx_->padic_recompose(d);
}

std::uint64_t GRElement::order() const {
    if (!is_unit()) throw NotAUnitError("nilpotent elements have no multiplicative order");
    std::uint64_t exponent = ctx_->field_order() - 1;
    for (std::uint64_t i = 0; i < (ctx_->s() - 1) * ctx_->m(); ++i) {
        if (exponent > ~std::uint64_t(0) / ctx_->p())
            throw InvalidInputError("unit group exponent overflows 64 bits");
        exponent *= ctx_->p();
    }
    std::uint64_t o = exponent;
    for (std::uint64_t q : prime_factors(exponent)) {
        while (o % q == 0 && pow(o / q) == ctx_->one()) o /= q;
    }
    return o;
}

std::string GRElement::str() const { return to_string(ZPoly(ctx_->char_mod(), coeffs_)); }

GRContext::GRContext(std::uint64_t p, std::uint64_t s, ZPoly modulus, ZPoly supplied)
    : p_(p),
      s_(s),
      m_(static_cast<std::uint64_t>(modulus.degree())),
      ps_(modulus.mod()),
      pm_(checked_pow(p, m_, "field order")),
      card_(checked_pow(ps_, m_, "ring cardinality")),
      modulus_(std::move(modulus)),
      supplied_(std::move(supplied)),
      field_(p, project(modulus_, p)) {}

GRContextPtr GRContext::make(std::uint64_t p, std::uint64_t s, const ZPoly& modulus) {
    if (!is_prime(p)) throw InvalidInputError(std::to_string(p) + " is not prime");
    if (s < 1) throw InvalidInputError("s must be positive");
    std::uint64_t ps = checked_pow(p, s, "characteristic");
    if (ps > kMaxModulus) throw InvalidInputError("p^s exceeds 2^31");
    if (modulus.mod() != ps)
        throw ContextMismatchError("modulus coefficients are not given mod p^s");
    if (modulus.degree() < 1) throw InvalidInputError("modulus must be nonconstant");
    if (modulus.leading() % p == 0)
        throw InvalidInputError("modulus leading coefficient is not a unit");
    ZPoly norm = modulus.is_monic() ? modulus : scale(modulus, mod_inv(modulus.leading(), ps));
    if (!is_irreducible(project(norm, p)))
        throw NotBasicIrreducibleError("modulus is not basic irreducible: mu(" +
                                       to_string(modulus) + ") is reducible over Z_" +
                                       std::to_string(p));

    auto ctx = std::shared_ptr<GRContext>(new GRContext(p, s, std::move(norm), modulus));
    ctx->basic_primitive_ = is_primitive(project(ctx->modulus_, p));

    if (ctx->pm_ <= kMaxTauSize) {
        // Teichmuller generator: Frobenius-power fixed point of a lift of a
        // primitive residue field element.  For a basic primitive modulus the
        // class of x already reduces to a generator.
        GRElement t = ctx->gen();
        if (!ctx->basic_primitive_) {
            const FFContext& f = ctx->field_;
            for (std::uint64_t idx = 1; idx < f.order(); ++idx) {
                FFElement cand = f.element_at(idx);
                if (!cand.is_zero() && f.element_order(cand) == f.order() - 1) {
                    t = GRElement(ctx, cand.coeffs);
                    break;
                }
            }
        }
        for (std::uint64_t it = 0; it < ctx->s_ + 2; ++it) {
            GRElement next = t.pow(ctx->pm_);
            if (next == t) break;
            t = std::move(next);
        }
        if (t.pow(ctx->pm_) != t) throw Error("Teichmuller iteration did not stabilize");
        std::uint64_t group = ctx->pm_ - 1;
        if (t.pow(group) != ctx->one())
            throw Error("Teichmuller candidate does not have order dividing p^m - 1");
        for (std::uint64_t q : prime_factors(group))
            if (t.pow(group / q) == ctx->one())
                throw Error("Teichmuller candidate has order < p^m - 1");
        ctx->xi_ = t;

        ctx->tau_.reserve(ctx->pm_);
        ctx->tau_.push_back(ctx->zero());
        GRElement pw = ctx->one();
        for (std::uint64_t e = 0; e + 1 < ctx->pm_; ++e) {
            ctx->tau_.push_back(pw);
            pw = pw * t;
        }
        for (std::size_t i = 0; i < ctx->tau_.size(); ++i)
            ctx->tau_by_reduction_[ctx->field_.encode(ctx->tau_[i].reduce())] = i;
    }
    return ctx;
}

std::uint64_t GRContext::unit_count() const {
    return checked_pow(p_, (s_ - 1) * m_, "unit count") * (pm_ - 1);
}

std::uint64_t GRContext::nilpotent_count() const {
    return checked_pow(p_, (s_ - 1) * m_, "nilpotent count");
}

GRElement GRContext::zero() const {
    return GRElement(shared_from_this(), std::vector<std::uint64_t>(m_, 0));
}

GRElement GRContext::one() const { return constant(1); }

GRElement GRContext::constant(std::uint64_t c) const {
    std::vector<std::uint64_t> v(m_, 0);
    v[0] = c % ps_;
    return GRElement(shared_from_this(), std::move(v));
}

GRElement GRContext::from_coeffs(std::vector<std::uint64_t> c) const {
    if (c.size() > m_) return from_poly(ZPoly(ps_, std::move(c)));
    c.resize(m_, 0);
    return GRElement(shared_from_this(), std::move(c));
}

GRElement GRContext::from_poly(const ZPoly& f) const {
    if (f.mod() != ps_) throw ContextMismatchError("polynomial is not over Z_{p^s}");
    std::vector<std::uint64_t> c(f.coeffs());
    c.resize(std::max<std::size_t>(c.size(), m_), 0);
    c = reduce_poly(std::move(c));
    return GRElement(shared_from_this(), std::move(c));
}

GRElement GRContext::gen() const {
    if (m_ == 1) {
        // class of x is the constant -modulus[0]
        return constant((ps_ - modulus_.coeff(0)) % ps_);
    }
    std::vector<std::uint64_t> c(m_, 0);
    c[1] = 1;
    return GRElement(shared_from_this(), std::move(c));
}

GRElement GRContext::element_at(std::uint64_t index) const {
    std::vector<std::uint64_t> c(m_, 0);
    for (std::uint64_t i = 0; i < m_; ++i) {
        c[i] = index % ps_;
        index /= ps_;
    }
    return GRElement(shared_from_this(), std::move(c));
}

std::vector<std::uint64_t> GRContext::reduce_poly(std::vector<std::uint64_t> c) const {
    while (c.size() > m_) {
        std::uint64_t lead = c.back();
        std::size_t d = c.size() - 1 - m_;
        if (lead != 0) {
            for (std::uint64_t i = 0; i <= m_; ++i) {
                auto& v = c[d + i];
                v = (v + ps_ - (lead * modulus_.coeff(i)) % ps_) % ps_;
            }
        }
        c.pop_back();
    }
    c.resize(m_, 0);
    return c;
}

const GRElement& GRContext::xi() const {
    if (!xi_) throw Error("Teichmuller generator unavailable (ring too large)");
    return *xi_;
}

GRElement GRContext::xi_pow(std::int64_t e) const {
    std::int64_t group = static_cast<std::int64_t>(pm_) - 1;
    std::int64_t r = e % group;
    if (r < 0) r += group;
    return xi().pow(static_cast<std::uint64_t>(r));
}

const std::vector<GRElement>& GRContext::teichmuller_set() const {
    if (tau_.empty()) throw Error("Teichmuller set unavailable (ring too large)");
    return tau_;
}

std::size_t GRContext::tau_index(const FFElement& reduced) const {
    auto it = tau_by_reduction_.find(field_.encode(reduced));
    if (it == tau_by_reduction_.end())
        throw Error("residue field element missing from the Teichmuller map");
    return it->second;
}

std::int64_t GRContext::teichmuller_exponent(const GRElement& a) const {
    if (!a.is_unit()) throw NotAUnitError("nilpotent elements have no Teichmuller exponent");
    return static_cast<std::int64_t>(tau_index(a.reduce())) - 1;
}

PAdicDigits GRContext::padic_decompose(const GRElement& a) const {
    if (tau_.empty()) throw Error("p-adic decomposition needs the Teichmuller set");
    PAdicDigits out;
    out.digits.reserve(s_);
    std::vector<std::uint64_t> cur(a.coeffs());
    for (std::uint64_t i = 0; i < s_; ++i) {
        FFElement red;
        red.coeffs.resize(m_);
        for (std::uint64_t j = 0; j < m_; ++j) red.coeffs[j] = cur[j] % p_;
        const GRElement& digit = tau_[tau_index(red)];
        out.digits.push_back(digit);
        for (std::uint64_t j = 0; j < m_; ++j) {
            std::uint64_t diff = (cur[j] + ps_ - digit.coeffs()[j]) % ps_;
            if (diff % p_ != 0) throw Error("p-adic digit extraction lost exact divisibility");
            cur[j] = diff / p_;
        }
    }
    return out;
}

GRElement GRContext::padic_recompose(const PAdicDigits& d) const {
    std::vector<std::uint64_t> acc(m_, 0);
    std::uint64_t scale = 1;
    for (const auto& digit : d.digits) {
        for (std::uint64_t j = 0; j < m_; ++j)
            acc[j] = (acc[j] + scale * digit.coeffs()[j]) % ps_;
        scale *= p_;
    }
    return GRElement(shared_from_this(), std::move(acc));
}

}  // namespace grmds
