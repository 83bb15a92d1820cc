#ifndef SMALLGEN_NUMERIC_HPP
#define SMALLGEN_NUMERIC_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace smallgen {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when a search exhausts its configured bound without a result.
struct NotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an interval comparison stays inconclusive at the precision cap.
struct PrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an enumeration exceeds its configured point cap.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when irreducibility of a defining polynomial cannot be certified
// and no override was requested.
struct UnverifiedIrreducibility : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline int kronecker(const Integer& a, const Integer& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

inline bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Largest m with n = m * square; keeps the sign of n.  Trial division,
// adequate for desk-scale discriminants.
Integer squarefree_part(const Integer& n);

// Primes <= limit, ascending.
std::vector<Integer> primes_up_to(const Integer& limit);

}  // namespace smallgen

#endif
