#pragma once

#include <cstdint>
#include <vector>

#include "grmds/zmod.hpp"

namespace grmds {

/// Element of F_{p^m}: coefficient vector of length m over Z_p.
struct FFElement {
    std::vector<std::uint64_t> coeffs;

    bool operator==(const FFElement&) const = default;
    bool is_zero() const {
        for (auto c : coeffs)
            if (c) return false;
        return true;
    }
};

/// True iff g (over a prime modulus) has no nontrivial factor.
/// Uses the gcd(g, x^{p^d} - x) criterion for d <= deg(g)/2.
bool is_irreducible(const ZPoly& g);

/// True iff the class of x has multiplicative order p^m - 1 in Z_p[x]/(g).
/// Requires g irreducible; throws InvalidInputError otherwise.
bool is_primitive(const ZPoly& g);

/// F_{p^m} = Z_p[x]/(modulus).  The modulus is normalized monic and must be
/// irreducible over Z_p.
class FFContext {
public:
    FFContext(std::uint64_t p, const ZPoly& modulus);

    std::uint64_t p() const { return p_; }
    std::uint64_t m() const { return m_; }
    std::uint64_t order() const { return order_; }  // p^m
    const ZPoly& modulus() const { return modulus_; }

    FFElement zero() const { return FFElement{std::vector<std::uint64_t>(m_, 0)}; }
    FFElement one() const;
    FFElement gen() const;  // class of x
    FFElement from_poly(const ZPoly& f) const;
    ZPoly to_poly(const FFElement& a) const;
    FFElement element_at(std::uint64_t index) const;  // base-p digits of index
    std::uint64_t encode(const FFElement& a) const;   // inverse of element_at

    FFElement add(const FFElement& a, const FFElement& b) const;
    FFElement sub(const FFElement& a, const FFElement& b) const;
    FFElement neg(const FFElement& a) const;
    FFElement mul(const FFElement& a, const FFElement& b) const;
    FFElement inv(const FFElement& a) const;  // extended Euclid; throws on 0
    FFElement pow(const FFElement& a, std::uint64_t e) const;

    std::uint64_t element_order(const FFElement& a) const;

    bool operator==(const FFContext& o) const {
        return p_ == o.p_ && modulus_ == o.modulus_;
    }

private:
    std::uint64_t p_;
    std::uint64_t m_;
    std::uint64_t order_;
    ZPoly modulus_;
};

/// True iff every square submatrix of the k x k matrix (row-major entries)
/// has nonzero determinant.  Minor sizes ascend, subsets in lexicographic
/// order, short-circuiting on the first singular minor.
bool ff_matrix_all_minors_nonzero(const FFContext& field,
                                  const std::vector<FFElement>& entries,
                                  std::size_t k);

/// Determinant over the field by Gaussian elimination.
FFElement ff_det(const FFContext& field, const std::vector<FFElement>& entries,
                 std::size_t k);

/// Prime factors (without multiplicity) by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace grmds
