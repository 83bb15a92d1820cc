#ifndef SMALLGEN_QUADSHARP_HPP
#define SMALLGEN_QUADSHARP_HPP

#include "smallgen/splitting.hpp"

namespace smallgen {

// a x^2 + b x + c with gcd(a,b,c) = 1 and b^2 - 4ac = d e^2 for squarefree
// d <= -1; its roots generate the imaginary quadratic field of radicand d.
struct QuadPoly {
    Integer a, b, c, e, d;

    IntPoly poly() const { return IntPoly({c, b, a}); }
    bool operator==(const QuadPoly& o) const = default;
};

// max(a, c); the squared height of either root (exact).
Integer quad_root_height(const QuadPoly& q);

// All valid QuadPoly for the radicand with max(a, c) <= B, ordered by
// (a, c, e, b).  Both signs of b appear.
std::vector<QuadPoly> enumerate_quad_generators(const Integer& d, const Integer& B);

// Minimal squared height over all generators of the field, with a witness.
std::pair<Integer, QuadPoly> minimal_quad_generator_height(const Integer& d);

struct SharpnessReport {
    PrimeSet prime_set;
    Integer bound_square;    // product of the selected primes
    Integer minimal_square;  // minimal max(a, c)
    QuadPoly witness;
    bool sharp;              // bound_square == minimal_square
};

// Compares the p-adic search bound against the true minimal generator height.
SharpnessReport sharpness_check(const Integer& d, const Integer& prime_bound);

}  // namespace smallgen

#endif
