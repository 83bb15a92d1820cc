#ifndef SMALLGEN_INTPOLY_HPP
#define SMALLGEN_INTPOLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "smallgen/interval.hpp"
#include "smallgen/numeric.hpp"

namespace smallgen {

// Dense univariate polynomial over Z, coefficients ascending.  The zero
// polynomial is the empty coefficient list; otherwise the leading
// coefficient is nonzero.
class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<Integer> coeffs);

    static IntPoly x_minus(const Integer& a) { return IntPoly({-a, 1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Integer& lc() const { return c_.back(); }
    const Integer& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<Integer>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const = default;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly scaled(const Integer& k) const;
    IntPoly derivative() const;

    Rational eval(const Rational& x) const;
    Integer eval(const Integer& x) const;
    Real eval(const Real& x) const;
    Complex eval(const Complex& z) const;

    Integer content() const;          // gcd of coefficients, 0 for zero poly
    IntPoly primitive_part() const;   // content and leading sign removed
    bool is_monic() const { return !is_zero() && lc() == 1; }

    // Exact quotient when o divides *this in Z[x]; nullopt otherwise.
    std::optional<IntPoly> divide_exact(const IntPoly& o) const;

    std::string str(const std::string& var = "x") const;

  private:
    void normalize();
    std::vector<Integer> c_;
};

// Resultant via the subresultant polynomial remainder sequence; sign follows
// the Sylvester determinant convention.
Integer poly_resultant(const IntPoly& f, const IntPoly& g);

// (-1)^{d(d-1)/2} res(f, f') / lc(f).
Integer poly_discriminant(const IntPoly& f);

// Monic gcd in Q[x], returned as a primitive polynomial in Z[x].
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

bool is_squarefree(const IntPoly& f);

// Exact count of distinct real roots of a squarefree polynomial (Sturm).
int real_root_count(const IntPoly& f);

// Real roots in the open interval (a, b), squarefree input.
int real_root_count_in(const IntPoly& f, const Rational& a, const Rational& b);

// Disjoint open rational intervals, each containing exactly one real root,
// ascending, each of width <= max_width.  Exact rational roots come back as
// degenerate intervals (lo == hi).
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const IntPoly& f,
                                                              const Rational& max_width);

}  // namespace smallgen

#endif
