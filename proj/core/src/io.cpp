#include "grmds/io.hpp"

#include <fstream>
#include <sstream>

#include "grmds/errors.hpp"

namespace grmds {

namespace {

const json& require_field(const json& j, const char* name) {
    if (!j.is_object()) throw ParseError("expected an object while looking for \"" +
                                         std::string(name) + "\"");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError("missing field \"" + std::string(name) + "\"");
    return *it;
}

bool is_nonneg_int(const json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::uint64_t require_uint(const json& j, const char* name) {
    const json& v = require_field(j, name);
    if (!is_nonneg_int(v)) throw ParseError("field \"" + std::string(name) +
                                            "\" must be a non-negative integer");
    return v.get<std::uint64_t>();
}

std::vector<std::uint64_t> uint_array(const json& v, const char* name) {
    if (!v.is_array()) throw ParseError("field \"" + std::string(name) + "\" must be an array");
    std::vector<std::uint64_t> out;
    for (const auto& e : v) {
        if (!is_nonneg_int(e))
            throw ParseError("field \"" + std::string(name) +
                             "\" must contain non-negative integers");
        out.push_back(e.get<std::uint64_t>());
    }
    return out;
}

}  // namespace

json ring_to_json(const GRContextPtr& ctx) {
    json j;
    j["p"] = ctx->p();
    j["s"] = ctx->s();
    j["modulus"] = ctx->supplied_modulus().coeffs();
    return j;
}

GRContextPtr ring_from_json(const json& j) {
    std::uint64_t p = require_uint(j, "p");
    std::uint64_t s = require_uint(j, "s");
    auto coeffs = uint_array(require_field(j, "modulus"), "modulus");
    std::uint64_t ps = 1;
    for (std::uint64_t i = 0; i < s; ++i) {
        if (ps > kMaxModulus / (p ? p : 1)) throw ParseError("p^s exceeds the supported range");
        ps *= p;
    }
    for (auto& c : coeffs) c %= ps;
    return GRContext::make(p, s, ZPoly(ps, std::move(coeffs)));
}

json element_to_json(const GRElement& a) { return json(a.coeffs()); }

GRElement element_from_json(const json& j, const GRContextPtr& ctx) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.rfind("xi^", 0) == 0) {
            try {
                return ctx->xi_pow(std::stoll(s.substr(3)));
            } catch (const std::invalid_argument&) {
            } catch (const std::out_of_range&) {
            }
        }
        if (s == "xi") return ctx->xi();
        throw ParseError("element string must look like \"xi^k\", got \"" + s + "\"");
    }
    if (j.is_array()) {
        auto c = uint_array(j, "element");
        if (c.size() > ctx->m()) throw ParseError("element has more than m coefficients");
        c.resize(ctx->m(), 0);
        return ctx->from_coeffs(std::move(c));
    }
    throw ParseError("element must be a coefficient array or an \"xi^k\" string");
}

json matrix_to_json(const GRMatrix& a) {
    json j;
    j["ring"] = ring_to_json(a.ring());
    j["order"] = a.order();
    json rows = json::array();
    for (std::size_t i = 0; i < a.order(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.order(); ++k) row.push_back(element_to_json(a.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

GRMatrix matrix_from_json(const json& j) {
    GRContextPtr ctx = ring_from_json(require_field(j, "ring"));
    std::uint64_t order = require_uint(j, "order");
    const json& rows = require_field(j, "entries");
    if (!rows.is_array() || rows.size() != order)
        throw ParseError("field \"entries\" must hold exactly `order` rows");
    std::vector<GRElement> entries;
    entries.reserve(order * order);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != order)
            throw ParseError("each row in \"entries\" must hold exactly `order` elements");
        for (const auto& e : row) entries.push_back(element_from_json(e, ctx));
    }
    return GRMatrix(ctx, order, std::move(entries));
}

json cauchy_spec_to_json(const CauchySpec& spec) {
    json j;
    j["kind"] = to_string(spec.kind);
    json xs = json::array();
    for (const auto& e : spec.xs) xs.push_back(element_to_json(e));
    j["xs"] = std::move(xs);
    if (!spec.ys.empty()) {
        json ys = json::array();
        for (const auto& e : spec.ys) ys.push_back(element_to_json(e));
        j["ys"] = std::move(ys);
    }
    if (spec.nilpotent_shift) j["l"] = element_to_json(*spec.nilpotent_shift);
    if (!spec.row_units.empty()) {
        json w = json::array();
        for (const auto& e : spec.row_units) w.push_back(element_to_json(e));
        j["w"] = std::move(w);
    }
    if (!spec.col_units.empty()) {
        json v = json::array();
        for (const auto& e : spec.col_units) v.push_back(element_to_json(e));
        j["v"] = std::move(v);
    }
    if (!spec.sigma.empty()) j["sigma"] = spec.sigma;
    if (!spec.eta.empty()) j["eta"] = spec.eta;
    return j;
}

CauchySpec cauchy_spec_from_json(const json& j, const GRContextPtr& ctx) {
    const json& kindj = require_field(j, "kind");
    if (!kindj.is_string()) throw ParseError("field \"kind\" must be a string");
    auto kind = cauchy_kind_from_string(kindj.get<std::string>());
    if (!kind) throw ParseError("unknown kind \"" + kindj.get<std::string>() + "\"");
    CauchySpec spec;
    spec.kind = *kind;
    auto elems = [&](const char* name) {
        std::vector<GRElement> out;
        auto it = j.find(name);
        if (it == j.end()) return out;
        if (!it->is_array()) throw ParseError("field \"" + std::string(name) +
                                              "\" must be an array");
        for (const auto& e : *it) out.push_back(element_from_json(e, ctx));
        return out;
    };
    spec.xs = elems("xs");
    spec.ys = elems("ys");
    spec.row_units = elems("w");
    spec.col_units = elems("v");
    if (auto it = j.find("l"); it != j.end()) spec.nilpotent_shift = element_from_json(*it, ctx);
    if (auto it = j.find("sigma"); it != j.end()) spec.sigma = uint_array(*it, "sigma");
    if (auto it = j.find("eta"); it != j.end()) spec.eta = uint_array(*it, "eta");
    return spec;
}

json morphism_to_json(const MorphismSpec& f) {
    json j;
    j["kind"] = to_string(f.kind);
    switch (f.kind) {
        case MorphismKind::FrobeniusPower: j["t"] = f.index; break;
        case MorphismKind::ScaledAutomorphism: j["i"] = f.index; break;
        case MorphismKind::PresentationIsomorphism:
            j["s_u"] = *f.conjugate_exponent;
            j["target_ring"] = ring_to_json(f.target);
            break;
    }
    if (f.scale) j["c"] = element_to_json(*f.scale);
    return j;
}

MorphismSpec morphism_from_json(const json& j, const GRContextPtr& source) {
    const json& kindj = require_field(j, "kind");
    if (!kindj.is_string()) throw ParseError("field \"kind\" must be a string");
    auto kind = morphism_kind_from_string(kindj.get<std::string>());
    if (!kind) throw ParseError("unknown kind \"" + kindj.get<std::string>() + "\"");
    MorphismSpec f;
    f.kind = *kind;
    f.source = source;
    f.target = source;
    switch (*kind) {
        case MorphismKind::FrobeniusPower: f.index = require_uint(j, "t"); break;
        case MorphismKind::ScaledAutomorphism: f.index = require_uint(j, "i"); break;
        case MorphismKind::PresentationIsomorphism:
            f.conjugate_exponent = require_uint(j, "s_u");
            f.target = ring_from_json(require_field(j, "target_ring"));
            break;
    }
    if (auto it = j.find("c"); it != j.end()) f.scale = element_from_json(*it, f.target);
    validate_morphism(f);
    return f;
}

json parse_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string dump_document(const json& j) { return j.dump(2) + "\n"; }

void emit_document(const json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << dump_document(j);
}

}  // namespace grmds
