#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grmds/matrix.hpp"

namespace grmds {

enum class MorphismKind { FrobeniusPower, ScaledAutomorphism, PresentationIsomorphism };

const char* to_string(MorphismKind kind);
std::optional<MorphismKind> morphism_kind_from_string(const std::string& s);

/// One MDS-preserving map.
///   frobenius_power:            a -> sigma^index(a)                 (same ring)
///   scaled_automorphism:        a -> sigma^index(a) * c             (same ring)
///   presentation_isomorphism:   class-of-x -> target-gen^{s_u}, then * c
struct MorphismSpec {
    MorphismKind kind = MorphismKind::FrobeniusPower;
    std::uint64_t index = 0;  // Frobenius power i (0 <= i <= m-1)
    std::optional<GRElement> scale;
    GRContextPtr source;
    GRContextPtr target;  // equals source except for presentation isomorphisms
    std::optional<std::uint64_t> conjugate_exponent;  // s_u
};

/// Checks ranges, unit scale, and (for presentation isomorphisms) that the
/// source modulus vanishes at target-gen^{s_u}.  Throws InvalidInputError.
void validate_morphism(const MorphismSpec& f);

GRElement apply_morphism(const MorphismSpec& f, const GRElement& a);
GRMatrix apply_morphism_to_matrix(const MorphismSpec& f, const GRMatrix& a);

/// Inverse of a frobenius_power or scaled_automorphism spec:
/// f_{i,c}^{-1} = f_{(m-i) mod m, sigma^{(m-i) mod m}(c^{-1})}.
MorphismSpec inverse_of(const MorphismSpec& f);

struct ScaledFamily {
    std::vector<MorphismSpec> morphisms;    // deduplicated, enumeration order
    std::uint64_t raw_count = 0;            // m * |U| index pairs
    std::uint64_t deduplicated_count = 0;   // distinct functions
};

/// All f_{i,c} with i in [0, m) and c a unit, deduplicated as functions.
/// Two specs are the same function iff they agree on 1 and on xi.
ScaledFamily enumerate_scaled_automorphisms(const GRContextPtr& ctx);

/// Exponents s_u in [1, p^m - 2] with h_source(target-gen^{s_u}) = 0, found by
/// direct evaluation.  Each hit is checked for gcd(s_u, p^m - 1) = 1.  Throws
/// NoIsomorphismFoundError when empty.
std::vector<std::uint64_t> find_conjugate_exponents(const GRContextPtr& source,
                                                    const GRContextPtr& target);

MorphismSpec make_presentation_isomorphism(const GRContextPtr& source,
                                           const GRContextPtr& target, std::uint64_t s_u,
                                           std::optional<GRElement> scale = std::nullopt);

/// Unramified extension GR(p^s, p^{sml}) of GR(p^s, p^{sm}); the base embeds
/// along a lifted root of its own modulus inside the extension.
struct ExtensionContext {
    GRContextPtr base;
    GRContextPtr ext;
    std::uint64_t ext_degree = 0;  // l
    GRElement gen_image;           // image of the base class of x
};

/// Builds the extension over a deterministically chosen degree-(m*l) modulus.
ExtensionContext make_extension(const GRContextPtr& base, std::uint64_t ext_degree);

/// Ties an existing extension ring to the base; validates (p, s, m*l | m).
ExtensionContext make_extension(const GRContextPtr& base, const GRContextPtr& ext);

GRElement embed(const ExtensionContext& e, const GRElement& a);

/// phi^t = sigma^{m*t} on the extension ring; 1 <= t <= l - 1.
GRElement frobenius_ext_auto(const ExtensionContext& e, const GRElement& a, std::uint64_t t);

/// True iff A involutory implies its image under the (pure) automorphism f is
/// involutory.  A scale other than 1 is rejected.
bool check_involutory_preserved(const GRMatrix& a, const MorphismSpec& f);

}  // namespace grmds
