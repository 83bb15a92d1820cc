#ifndef SMALLGEN_SPLITTING_HPP
#define SMALLGEN_SPLITTING_HPP

#include <map>
#include <optional>
#include <vector>

#include "smallgen/numberfield.hpp"

namespace smallgen {

enum class SplitMethod { generic, exact_quadratic, unsupported };

// One place above p.  For a degree-one place the root designates the place:
// the prime ideal is p*O + (eta - root)*O, where eta is theta for the
// generic method and the second order-basis element for quadratic fields.
struct SplitPair {
    Integer e, f;
    std::optional<Integer> root;
};

struct SplittingType {
    Integer p;
    SplitMethod method;
    std::vector<SplitPair> pairs;

    bool has_degree_one() const;
};

// Exact for quadratic fields via the Kronecker symbol (any p, including
// ramified primes and divisors of the polynomial index); for higher degree
// only p not dividing poly_disc is supported (factorization mod p).
SplittingType splitting_type(const FieldPtr& k, const Integer& p);

bool has_degree_one_place(const FieldPtr& k, const Integer& p);

// p <= x, p not dividing poly_disc, splitting into d degree-one places.
long count_split_primes(const FieldPtr& k, const Integer& x);

// Qualifying primes with minimal product strictly above c_k^d.
struct PrimeSet {
    FieldPtr field;
    std::vector<Integer> primes;  // ascending
    std::vector<Integer> roots;   // designated degree-one root per prime
    Integer product;
    Real threshold;               // c_k^d
};

PrimeSet find_prime_set(const FieldPtr& k, const Integer& prime_bound);

// int_2^x dt/log t, adaptive Simpson, absolute error well below 1e-9.
double logarithmic_integral(double x);

// c1 * x^{1/2} * (log_abs_disc + degree * log x).
double lo_bound(double log_abs_disc, const Integer& degree, double x, double c1);

struct ChebReport {
    Rational c1;
    Rational cheb_threshold;   // 15^20 * c1^20 * (d!)^60
    bool hypothesis_met;       // threshold <= |disc|
    Real window_lo, window_hi; // (|disc|^{1/2}, 2|disc|^{1/2}]
    long window_count;         // completely split primes inside the window
    double tail_bound;         // 2 c1 (d!)^2 x^{1/2}(log|disc| + log x) at x = window_hi
};

ChebReport lemma51_report(const FieldPtr& k, const Rational& c1);

// Factor-degree patterns of the defining polynomial mod p over unramified
// p <= x, keyed by the ascending multiset of degrees.
struct FrobeniusCensus {
    std::map<std::vector<int>, long> counts;
    long primes_used = 0;
    double li = 0.0;
};

FrobeniusCensus frobenius_census(const FieldPtr& k, const Integer& x);

}  // namespace smallgen

#endif
