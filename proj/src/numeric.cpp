#include "smallgen/numeric.hpp"

namespace smallgen {

Integer squarefree_part(const Integer& n) {
    if (n == 0) throw std::invalid_argument("squarefree_part of zero");
    Integer m = abs(n);
    Integer core = 1;
    for (Integer p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e % 2 == 1) core *= p;
        }
    }
    core *= m;  // remaining prime factor
    return sgn(n) < 0 ? -core : core;
}

std::vector<Integer> primes_up_to(const Integer& limit) {
    std::vector<Integer> out;
    if (limit < 2) return out;
    unsigned long n = limit.get_ui();
    std::vector<bool> comp(n + 1, false);
    for (unsigned long i = 2; i <= n; ++i) {
        if (!comp[i]) {
            out.emplace_back(static_cast<long>(i));
            for (unsigned long j = i * i; j <= n; j += i) comp[j] = true;
        }
    }
    return out;
}

}  // namespace smallgen
