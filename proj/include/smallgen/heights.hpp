#ifndef SMALLGEN_HEIGHTS_HPP
#define SMALLGEN_HEIGHTS_HPP

#include <optional>

#include "smallgen/numberfield.hpp"

namespace smallgen {

// Multiplicative Weil height with tracked error; the squared height is
// recorded exactly when provably an integer (rationals and quadratic
// elements).
struct HeightValue {
    Real value;
    std::optional<Integer> exact_square;
};

// Exact squared height read off a degree <= 2 minimal polynomial, when
// provable (rationals; complex-quadratic always; real-quadratic when both
// roots land on the same side of the unit circle).
std::optional<Integer> exact_height_square(const IntPoly& min_poly);

// |lc(f)| * prod max(1, |root|) over all complex roots.
Real mahler_measure(const IntPoly& f, mpfr_prec_t prec = Real::kDefaultPrec);

// H(alpha) = M(min_poly)^{1/deg}; H(0) = 1 by convention.
HeightValue weil_height(const FieldElement& alpha, mpfr_prec_t prec = Real::kDefaultPrec);

// Independent route: product of max(1, |alpha|_v) over the archimedean
// places times the denominator-ideal index to the power 1/d.
Real height_embedding_route(const FieldElement& alpha, mpfr_prec_t prec = Real::kDefaultPrec);

// Sum of log |alpha|_v over all places (archimedean from embeddings, finite
// from ideal indices); encloses zero by the product formula.
Real product_formula_residual(const FieldElement& alpha, mpfr_prec_t prec = Real::kDefaultPrec);

}  // namespace smallgen

#endif
