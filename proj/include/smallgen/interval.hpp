#ifndef SMALLGEN_INTERVAL_HPP
#define SMALLGEN_INTERVAL_HPP

#include <mpfr.h>

#include <optional>
#include <string>
#include <utility>

#include "smallgen/numeric.hpp"

namespace smallgen {

// Closed interval [lo, hi] with MPFR endpoints.  Every operation rounds
// outward, so a Real always encloses the exact value it tracks.
class Real {
  public:
    static constexpr mpfr_prec_t kDefaultPrec = 128;
    static constexpr mpfr_prec_t kMaxPrec = 4096;

    explicit Real(mpfr_prec_t prec = kDefaultPrec);
    Real(long v, mpfr_prec_t prec);
    Real(const Integer& v, mpfr_prec_t prec = kDefaultPrec);
    Real(const Rational& v, mpfr_prec_t prec = kDefaultPrec);
    static Real from_double(double v, mpfr_prec_t prec = kDefaultPrec);
    static Real from_endpoints(double lo, double hi, mpfr_prec_t prec = kDefaultPrec);
    static Real pi(mpfr_prec_t prec);

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(Real o);
    ~Real();

    mpfr_prec_t prec() const { return prec_; }
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid() const;
    double rad() const;
    bool is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

    Real operator-() const;
    Real operator+(const Real& o) const;
    Real operator-(const Real& o) const;
    Real operator*(const Real& o) const;
    Real operator/(const Real& o) const;  // requires o to exclude zero
    Real abs() const;
    Real sqr() const;
    Real sqrt() const;        // lower endpoint clamped at 0
    Real rootn(unsigned long n) const;  // requires nonnegative interval
    Real pow_ui(unsigned long n) const;
    Real log() const;         // requires strictly positive interval
    Real exp() const;
    Real max1() const;        // max(1, x), pointwise
    Real hull(const Real& o) const;
    Real widened(double eps) const;  // add [-eps, eps]

    bool contains_zero() const;
    bool contains(const Rational& q) const;
    // Conclusive three-way comparison: -1, 0 (only for exact point equality), +1,
    // or nullopt when the intervals overlap.
    std::optional<int> compare(const Real& o) const;
    bool surely_lt(const Real& o) const;
    bool surely_gt(const Real& o) const;
    bool surely_positive() const;

    // Collapse to the midpoint (exactly representable), used to restart
    // Newton iterations without interval growth.
    Real midpoint_real() const;

    std::string str(int digits = 17) const;

    friend void swap(Real& a, Real& b) noexcept;

  private:
    void init(mpfr_prec_t prec);
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

// Axis-aligned complex rectangle.
struct Complex {
    Real re, im;

    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(mpfr_prec_t prec = Real::kDefaultPrec) : re(prec), im(prec) {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator/(const Complex& o) const {
        Real den = o.re.sqr() + o.im.sqr();
        return {(re * o.re + im * o.im) / den, (im * o.re - re * o.im) / den};
    }
    Complex conj() const { return {re, -im}; }
    Real abs2() const { return re.sqr() + im.sqr(); }
    Real abs() const { return abs2().sqrt(); }
    Complex midpoint() const { return {re.midpoint_real(), im.midpoint_real()}; }
};

}  // namespace smallgen

#endif
