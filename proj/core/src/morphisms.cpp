#include "grmds/morphisms.hpp"

#include <map>
#include <numeric>

#include "grmds/errors.hpp"

namespace grmds {

const char* to_string(MorphismKind kind) {
    switch (kind) {
        case MorphismKind::FrobeniusPower: return "frobenius_power";
        case MorphismKind::ScaledAutomorphism: return "scaled_automorphism";
        case MorphismKind::PresentationIsomorphism: return "presentation_isomorphism";
    }
    return "?";
}

std::optional<MorphismKind> morphism_kind_from_string(const std::string& s) {
    for (MorphismKind k : {MorphismKind::FrobeniusPower, MorphismKind::ScaledAutomorphism,
                           MorphismKind::PresentationIsomorphism}) {
        if (s == to_string(k)) return k;
    }
    return std::nullopt;
}

namespace {

GRElement frobenius_n(GRElement a, std::uint64_t n) {
    for (std::uint64_t i = 0; i < n; ++i) a = a.frobenius();
    return a;
}

/// Horner evaluation of a Z_{p^s} polynomial at a ring element.
GRElement eval_zpoly(const ZPoly& f, const GRElement& at, const GRContextPtr& ctx) {
    GRElement acc = ctx->zero();
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * at + ctx->constant(c[i]);
    return acc;
}

}  // namespace

void validate_morphism(const MorphismSpec& f) {
    if (!f.source) throw InvalidInputError("morphism has no source ring");
    const GRContextPtr& tgt = f.target ? f.target : f.source;
    if (f.scale) {
        if (!f.scale->ring() || !f.scale->ring()->same_ring(*tgt))
            throw ContextMismatchError("scale lives outside the target ring");
        if (!f.scale->is_unit()) throw InvalidInputError("scale c is not a unit");
    }
    switch (f.kind) {
        case MorphismKind::FrobeniusPower:
        case MorphismKind::ScaledAutomorphism:
            if (f.target && !f.target->same_ring(*f.source))
                throw InvalidInputError("automorphism source and target must agree");
            if (f.index >= f.source->m())
                throw InvalidInputError("Frobenius power out of range [0, m - 1]");
            break;
        case MorphismKind::PresentationIsomorphism: {
            if (!f.target) throw InvalidInputError("presentation isomorphism needs a target ring");
            if (f.source->p() != f.target->p() || f.source->s() != f.target->s() ||
                f.source->m() != f.target->m())
                throw InvalidInputError("source and target do not share (p, s, m)");
            if (!f.conjugate_exponent)
                throw InvalidInputError("presentation isomorphism needs the exponent s_u");
            GRElement root = f.target->gen().pow(*f.conjugate_exponent);
            if (!eval_zpoly(f.source->modulus(), root, f.target).is_zero())
                throw InvalidInputError("source modulus does not vanish at target gen^s_u");
            break;
        }
    }
}

GRElement apply_morphism(const MorphismSpec& f, const GRElement& a) {
    if (!a.ring() || !a.ring()->same_ring(*f.source))
        throw ContextMismatchError("element lives outside the morphism's source ring");
    GRElement out;
    switch (f.kind) {
        case MorphismKind::FrobeniusPower:
        case MorphismKind::ScaledAutomorphism:
            out = frobenius_n(a, f.index);
            break;
        case MorphismKind::PresentationIsomorphism: {
            GRElement root = f.target->gen().pow(*f.conjugate_exponent);
            out = f.target->zero();
            const auto& c = a.coeffs();
            for (std::size_t i = c.size(); i-- > 0;)
                out = out * root + f.target->constant(c[i]);
            break;
        }
    }
    if (f.scale) out = out * *f.scale;
    return out;
}

GRMatrix apply_morphism_to_matrix(const MorphismSpec& f, const GRMatrix& a) {
    if (!a.ring()->same_ring(*f.source))
        throw ContextMismatchError("matrix lives outside the morphism's source ring");
    std::vector<GRElement> out;
    out.reserve(a.entries().size());
    for (const auto& e : a.entries()) out.push_back(apply_morphism(f, e));
    const GRContextPtr& tgt = f.target ? f.target : f.source;
    return GRMatrix(tgt, a.order(), std::move(out));
}

MorphismSpec inverse_of(const MorphismSpec& f) {
    if (f.kind == MorphismKind::PresentationIsomorphism)
        throw InvalidInputError("inverse is only provided for the automorphism family");
    const std::uint64_t m = f.source->m();
    std::uint64_t j = (m - f.index % m) % m;
    MorphismSpec inv;
    inv.kind = f.kind;
    inv.index = j;
    inv.source = f.source;
    inv.target = f.source;
    if (f.scale) inv.scale = frobenius_n(f.scale->inv(), j);
    return inv;
}

ScaledFamily enumerate_scaled_automorphisms(const GRContextPtr& ctx) {
    if (ctx->element_count() > (std::uint64_t(1) << 22))
        throw InvalidInputError("ring too large for unit enumeration");
    ScaledFamily fam;
    const std::uint64_t m = ctx->m();
    const GRElement& xi = ctx->xi();
    std::map<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>, bool> seen;
    for (std::uint64_t i = 0; i < m; ++i) {
        GRElement xi_img = frobenius_n(xi, i);
        for (std::uint64_t idx = 0; idx < ctx->element_count(); ++idx) {
            GRElement c = ctx->element_at(idx);
            if (!c.is_unit()) continue;
            ++fam.raw_count;
            // the images of 1 and xi pin the whole function down
            auto key = std::make_pair(c.coeffs(), (xi_img * c).coeffs());
            if (seen.emplace(std::move(key), true).second) {
                MorphismSpec f;
                f.kind = MorphismKind::ScaledAutomorphism;
                f.index = i;
                f.scale = c;
                f.source = ctx;
                f.target = ctx;
                fam.morphisms.push_back(std::move(f));
            }
        }
    }
    fam.deduplicated_count = fam.morphisms.size();
    return fam;
}

std::vector<std::uint64_t> find_conjugate_exponents(const GRContextPtr& source,
                                                    const GRContextPtr& target) {
    if (source->p() != target->p() || source->s() != target->s() || source->m() != target->m())
        throw InvalidInputError("source and target do not share (p, s, m)");
    const std::uint64_t group = source->field_order() - 1;
    const std::uint64_t hi = group >= 2 ? group - 1 : 1;
    std::vector<std::uint64_t> found;
    GRElement eta2 = target->gen();
    GRElement power = eta2;  // eta2^s_u, updated incrementally
    for (std::uint64_t s_u = 1; s_u <= hi; ++s_u) {
        if (eval_zpoly(source->modulus(), power, target).is_zero()) {
            if (std::gcd(s_u, group) != 1)
                throw Error("conjugate exponent " + std::to_string(s_u) +
                            " is not coprime to p^m - 1");
            found.push_back(s_u);
        }
        power = power * eta2;
    }
    if (found.empty()) throw NoIsomorphismFoundError("no conjugate exponent found");
    return found;
}

MorphismSpec make_presentation_isomorphism(const GRContextPtr& source, const GRContextPtr& target,
                                           std::uint64_t s_u, std::optional<GRElement> scale) {
    MorphismSpec f;
    f.kind = MorphismKind::PresentationIsomorphism;
    f.source = source;
    f.target = target;
    f.conjugate_exponent = s_u;
    f.scale = std::move(scale);
    validate_morphism(f);
    return f;
}

namespace {

/// Lifts a residue-field root of h into the ring by Newton iteration.
GRElement lift_root(const ZPoly& h, const GRContextPtr& ring) {
    const FFContext& field = ring->residue_field();
    ZPoly hbar = project(h, ring->p());
    FFElement root_bar = field.zero();
    bool found = false;
    for (std::uint64_t idx = 0; idx < field.order(); ++idx) {
        FFElement cand = field.element_at(idx);
        FFElement acc = field.zero();
        const auto& c = hbar.coeffs();
        for (std::size_t i = c.size(); i-- > 0;)
            acc = field.add(field.mul(acc, cand), field.from_poly(ZPoly::constant(ring->p(), c[i])));
        if (acc.is_zero()) {
            root_bar = cand;
            found = true;
            break;
        }
    }
    if (!found) throw Error("modulus has no root in the extension's residue field");

    // derivative of h over Z_{p^s}
    std::vector<std::uint64_t> dc;
    for (std::size_t i = 1; i < h.coeffs().size(); ++i)
        dc.push_back((h.coeffs()[i] * (i % ring->char_mod())) % ring->char_mod());
    ZPoly dh(ring->char_mod(), std::move(dc));

    GRElement r = ring->from_poly(ZPoly(ring->char_mod(), field.to_poly(root_bar).coeffs()));
    for (int iter = 0; iter < 64; ++iter) {
        GRElement val = eval_zpoly(h, r, ring);
        if (val.is_zero()) return r;
        r = r - val * eval_zpoly(dh, r, ring).inv();
    }
    throw Error("root lifting did not converge");
}

ExtensionContext tie_extension(const GRContextPtr& base, const GRContextPtr& ext,
                               std::uint64_t l) {
    ExtensionContext e;
    e.base = base;
    e.ext = ext;
    e.ext_degree = l;
    e.gen_image = lift_root(base->modulus(), ext);
    return e;
}

}  // namespace

ExtensionContext make_extension(const GRContextPtr& base, std::uint64_t ext_degree) {
    if (ext_degree < 2) throw InvalidInputError("extension degree must be at least 2");
    const std::uint64_t p = base->p();
    const std::uint64_t deg = base->m() * ext_degree;
    // deterministic scan over monic degree-deg polynomials mod p, lifted as-is
    std::uint64_t span = 1;
    for (std::uint64_t i = 0; i < deg; ++i) {
        if (span > (std::uint64_t(1) << 40) / p) throw InvalidInputError("extension degree too large");
        span *= p;
    }
    for (std::uint64_t code = 1; code < span; ++code) {
        std::vector<std::uint64_t> c(deg + 1, 0);
        std::uint64_t v = code;
        for (std::uint64_t i = 0; i < deg; ++i) {
            c[i] = v % p;
            v /= p;
        }
        c[deg] = 1;
        ZPoly f(p, c);
        if (!is_irreducible(f) || !is_primitive(f)) continue;
        ZPoly lifted(base->char_mod(), c);
        return tie_extension(base, GRContext::make(p, base->s(), lifted), ext_degree);
    }
    throw Error("no primitive modulus of the requested degree found");
}

ExtensionContext make_extension(const GRContextPtr& base, const GRContextPtr& ext) {
    if (base->p() != ext->p() || base->s() != ext->s())
        throw InvalidInputError("base and extension do not share (p, s)");
    if (ext->m() % base->m() != 0 || ext->m() <= base->m())
        throw InvalidInputError("extension degree must be a proper multiple of the base degree");
    return tie_extension(base, ext, ext->m() / base->m());
}

GRElement embed(const ExtensionContext& e, const GRElement& a) {
    if (!a.ring() || !a.ring()->same_ring(*e.base))
        throw ContextMismatchError("element lives outside the base ring");
    GRElement out = e.ext->zero();
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        out = out * e.gen_image + e.ext->constant(c[i]);
    return out;
}

GRElement frobenius_ext_auto(const ExtensionContext& e, const GRElement& a, std::uint64_t t) {
    if (t < 1 || t >= e.ext_degree)
        throw InvalidInputError("extension Frobenius power out of range [1, l - 1]");
    if (!a.ring() || !a.ring()->same_ring(*e.ext))
        throw ContextMismatchError("element lives outside the extension ring");
    return frobenius_n(a, e.base->m() * t);
}

bool check_involutory_preserved(const GRMatrix& a, const MorphismSpec& f) {
    if (f.scale && !(*f.scale == f.scale->ring()->one()))
        throw InvalidInputError("involutory preservation applies to pure automorphisms only");
    if (f.kind == MorphismKind::PresentationIsomorphism && f.scale)
        throw InvalidInputError("involutory preservation applies to pure automorphisms only");
    if (!mat_is_involutory(a)) return true;
    return mat_is_involutory(apply_morphism_to_matrix(f, a));
}

}  // namespace grmds
