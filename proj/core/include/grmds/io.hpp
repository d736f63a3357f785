#pragma once

#include <string>

#include <json.hpp>

#include "grmds/cauchy.hpp"
#include "grmds/morphisms.hpp"

namespace grmds {

using json = nlohmann::json;

// Ring documents: {"p": int, "s": int, "modulus": [c0, c1, ...]} with the
// modulus as supplied, ascending coefficients.
json ring_to_json(const GRContextPtr& ctx);
GRContextPtr ring_from_json(const json& j);

// Elements: ascending coefficient array of length <= m; "xi^k" shorthand is
// accepted on input only.
json element_to_json(const GRElement& a);
GRElement element_from_json(const json& j, const GRContextPtr& ctx);

// Matrix documents: {"ring": ..., "order": k, "entries": [[elem, ...], ...]}.
json matrix_to_json(const GRMatrix& a);
GRMatrix matrix_from_json(const json& j);

// Cauchy spec documents:
// {"kind": str, "xs": [...], "ys"?: [...], "l"?: elem, "w"?: [...],
//  "v"?: [...], "sigma"?: [int...], "eta"?: [int...]}.
json cauchy_spec_to_json(const CauchySpec& spec);
CauchySpec cauchy_spec_from_json(const json& j, const GRContextPtr& ctx);

// Morphism documents:
// {"kind": str, "t"?: int, "i"?: int, "c"?: elem, "s_u"?: int,
//  "target_ring"?: ring}.
json morphism_to_json(const MorphismSpec& f);
MorphismSpec morphism_from_json(const json& j, const GRContextPtr& source);

/// Reads a whole JSON document; throws ParseError on I/O or syntax failure.
json parse_document(const std::string& path);

/// Writes with sorted keys, two-space indent and a trailing LF.
void emit_document(const json& j, const std::string& path);

std::string dump_document(const json& j);

}  // namespace grmds
