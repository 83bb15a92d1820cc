#include "smallgen/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace smallgen {

void Real::init(mpfr_prec_t prec) {
    prec_ = prec;
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
}

Real::Real(mpfr_prec_t prec) {
    init(prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Real::Real(long v, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_si(lo_, v, MPFR_RNDD);
    mpfr_set_si(hi_, v, MPFR_RNDU);
}

Real::Real(const Integer& v, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_z(lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_, v.get_mpz_t(), MPFR_RNDU);
}

Real::Real(const Rational& v, mpfr_prec_t prec) {
    init(prec);
    mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
}

Real Real::from_double(double v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
}

Real Real::from_endpoints(double lo, double hi, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.lo_, lo, MPFR_RNDD);
    mpfr_set_d(r.hi_, hi, MPFR_RNDU);
    return r;
}

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Real::Real(const Real& o) {
    init(o.prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Real::Real(Real&& o) noexcept {
    init(o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Real& Real::operator=(Real o) {
    swap(*this, o);
    return *this;
}

Real::~Real() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void swap(Real& a, Real& b) noexcept {
    mpfr_swap(a.lo_, b.lo_);
    mpfr_swap(a.hi_, b.hi_);
    std::swap(a.prec_, b.prec_);
}

double Real::mid() const {
    return 0.5 * (lo_d() + hi_d());
}

double Real::rad() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double r = mpfr_get_d(w, MPFR_RNDU) * 0.5;
    mpfr_clear(w);
    return r;
}

Real Real::operator-() const {
    Real r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Real Real::operator+(const Real& o) const {
    Real r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Real Real::operator-(const Real& o) const {
    Real r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Real Real::operator*(const Real& o) const {
    Real r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lo = min of the four products rounded down
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi = max of the four products rounded up
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Real Real::operator/(const Real& o) const {
    if (o.contains_zero())
        throw std::domain_error("interval division by interval containing zero");
    Real r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Real Real::abs() const {
    Real r(prec_);
    if (mpfr_sgn(lo_) >= 0) {
        mpfr_set(r.lo_, lo_, MPFR_RNDD);
        mpfr_set(r.hi_, hi_, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) <= 0) {
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_, 1);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
    }
    return r;
}

Real Real::sqr() const {
    Real a = abs();
    Real r(prec_);
    mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Real Real::sqrt() const {
    if (mpfr_sgn(hi_) < 0)
        throw std::domain_error("sqrt of negative interval");
    Real r(prec_);
    if (mpfr_sgn(lo_) < 0)
        mpfr_set_zero(r.lo_, 1);
    else
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Real Real::rootn(unsigned long n) const {
    if (mpfr_sgn(lo_) < 0)
        throw std::domain_error("rootn of interval with negative part");
    Real r(prec_);
    mpfr_rootn_ui(r.lo_, lo_, n, MPFR_RNDD);
    mpfr_rootn_ui(r.hi_, hi_, n, MPFR_RNDU);
    return r;
}

Real Real::pow_ui(unsigned long n) const {
    if (n == 0) return Real(1L, prec_);
    if (n % 2 == 0) {
        Real a = abs();
        Real r(prec_);
        mpfr_pow_ui(r.lo_, a.lo_, n, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, a.hi_, n, MPFR_RNDU);
        return r;
    }
    Real r(prec_);
    mpfr_pow_ui(r.lo_, lo_, n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, hi_, n, MPFR_RNDU);
    return r;
}

Real Real::log() const {
    if (mpfr_sgn(lo_) <= 0)
        throw std::domain_error("log of non-positive interval");
    Real r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Real Real::exp() const {
    Real r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Real Real::max1() const {
    Real one(1L, prec_);
    Real r(prec_);
    mpfr_max(r.lo_, lo_, one.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, hi_, one.hi_, MPFR_RNDU);
    return r;
}

Real Real::hull(const Real& o) const {
    Real r(std::max(prec_, o.prec_));
    mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Real Real::widened(double eps) const {
    Real r(prec_);
    mpfr_sub_d(r.lo_, lo_, eps, MPFR_RNDD);
    mpfr_add_d(r.hi_, hi_, eps, MPFR_RNDU);
    return r;
}

bool Real::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Real::contains(const Rational& q) const {
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

std::optional<int> Real::compare(const Real& o) const {
    if (mpfr_cmp(hi_, o.lo_) < 0) return -1;
    if (mpfr_cmp(lo_, o.hi_) > 0) return 1;
    if (mpfr_equal_p(lo_, hi_) && mpfr_equal_p(o.lo_, o.hi_) && mpfr_equal_p(lo_, o.lo_))
        return 0;
    return std::nullopt;
}

bool Real::surely_lt(const Real& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool Real::surely_gt(const Real& o) const {
    return mpfr_cmp(lo_, o.hi_) > 0;
}

bool Real::surely_positive() const {
    return mpfr_sgn(lo_) > 0;
}

Real Real::midpoint_real() const {
    Real r(prec_);
    mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
    mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
    return r;
}

std::string Real::str(int digits) const {
    char buf[512];
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, m);
    mpfr_clear(m);
    return buf;
}

}  // namespace smallgen
