#ifndef SMALLGEN_ROOTS_HPP
#define SMALLGEN_ROOTS_HPP

#include <optional>
#include <vector>

#include "smallgen/intpoly.hpp"
#include "smallgen/interval.hpp"

namespace smallgen {

// A disk certified to contain exactly one root of the source polynomial.
// Real roots carry an exactly-zero imaginary part.
struct CertifiedRoot {
    Real re, im;    // point approximation (degenerate interval)
    double radius;  // disk radius around the approximation
    bool is_real;

    Complex enclosure() const {
        return {re.widened(radius), is_real ? Real(0L, re.prec()) : im.widened(radius)};
    }
};

// All deg(f) roots as pairwise disjoint certified disks with radii at most
// target_radius.  Order: real roots ascending, then conjugate pairs with the
// positive-imaginary representative first, pairs sorted by ascending
// imaginary part.  Precision escalates internally (cap 4096 bits).
std::vector<CertifiedRoot> certified_roots(const IntPoly& f, double target_radius);

enum class IrredStatus { proved_irreducible, proved_reducible, unknown };

struct IrredResult {
    IrredStatus status;
    std::optional<IntPoly> witness_factor;  // set when proved_reducible
    std::optional<Integer> witness_prime;   // set for a mod-p irreducibility proof
};

// Certificate-backed irreducibility test over Q for primitive polynomials:
// a mod-p witness, or for degree <= 4 a rational-root plus bounded
// quadratic-factor exclusion.  Degree >= 5 without a mod-p witness is
// reported unknown.
IrredResult irreducibility_check(const IntPoly& f);

}  // namespace smallgen

#endif
