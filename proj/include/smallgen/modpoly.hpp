#ifndef SMALLGEN_MODPOLY_HPP
#define SMALLGEN_MODPOLY_HPP

#include <vector>

#include "smallgen/intpoly.hpp"
#include "smallgen/numeric.hpp"

namespace smallgen {

// Polynomial over F_p, coefficients ascending in [0, p).
class ModPoly {
  public:
    ModPoly(Integer p, std::vector<Integer> coeffs);
    static ModPoly reduce(const IntPoly& f, const Integer& p);
    static ModPoly x(const Integer& p) { return ModPoly(p, {0, 1}); }

    const Integer& modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Integer& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<Integer>& coeffs() const { return c_; }
    bool is_monic() const { return !is_zero() && c_.back() == 1; }

    bool operator==(const ModPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator<(const ModPoly& o) const;  // degree, then coefficients; for canonical ordering

    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly monic() const;
    ModPoly rem(const ModPoly& o) const;
    ModPoly derivative() const;
    // this^e mod m
    ModPoly powmod(const Integer& e, const ModPoly& m) const;

    // Root of a linear monic factor x - a: returns a.
    Integer linear_root() const;

    IntPoly lift() const { return IntPoly(std::vector<Integer>(c_)); }

  private:
    void normalize();
    Integer p_;
    std::vector<Integer> c_;
};

ModPoly modpoly_gcd(ModPoly a, ModPoly b);

struct ModFactor {
    ModPoly factor;  // monic irreducible
    int multiplicity;
};

// Full factorization of f mod p into monic irreducibles with multiplicities:
// distinct-degree splitting followed by Cantor-Zassenhaus equal-degree
// splitting, deterministic via a per-call PRNG seed.  Requires p prime and
// f nonzero mod p.  Factors come back sorted canonically.
std::vector<ModFactor> factor_mod_p(const IntPoly& f, const Integer& p);

}  // namespace smallgen

#endif
