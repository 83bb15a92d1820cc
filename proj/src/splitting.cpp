#include "smallgen/splitting.hpp"

#include <algorithm>
#include <cmath>

#include "smallgen/modpoly.hpp"

namespace smallgen {

namespace {

std::vector<Integer> roots_mod_p(const IntPoly& f, const Integer& p) {
    std::vector<Integer> out;
    for (const auto& fac : factor_mod_p(f, p))
        if (fac.factor.degree() == 1) out.push_back(fac.factor.linear_root());
    std::sort(out.begin(), out.end());
    return out;
}

IntPoly quadratic_order_gen_poly(const FieldPtr& k) {
    return min_poly(k->from_order_coords({Rational(0), Rational(1)}));
}

}  // namespace

bool SplittingType::has_degree_one() const {
    if (method == SplitMethod::unsupported) return false;
    for (const auto& pr : pairs)
        if (pr.f == 1) return true;
    return false;
}

SplittingType splitting_type(const FieldPtr& k, const Integer& p) {
    SplittingType st{p, SplitMethod::unsupported, {}};
    int d = k->degree();
    if (d == 2) {
        st.method = SplitMethod::exact_quadratic;
        int kr = kronecker(k->field_disc(), p);
        if (kr == -1) {
            st.pairs.push_back({Integer(1), Integer(2), std::nullopt});
            return st;
        }
        auto roots = roots_mod_p(quadratic_order_gen_poly(k), p);
        if (kr == 1) {
            for (const auto& a : roots)
                st.pairs.push_back({Integer(1), Integer(1), a});
        } else {
            st.pairs.push_back({Integer(2), Integer(1), roots.at(0)});
        }
        return st;
    }
    if (d == 1) {
        st.method = SplitMethod::generic;
        Integer a = (-k->defining_poly()[0]) % p;
        if (a < 0) a += p;
        st.pairs.push_back({Integer(1), Integer(1), a});
        return st;
    }
    if (k->poly_disc() % p != 0) {
        st.method = SplitMethod::generic;
        for (const auto& fac : factor_mod_p(k->defining_poly(), p)) {
            std::optional<Integer> r;
            if (fac.factor.degree() == 1) r = fac.factor.linear_root();
            st.pairs.push_back({Integer(1), Integer(fac.factor.degree()), r});
        }
    }
    return st;
}

bool has_degree_one_place(const FieldPtr& k, const Integer& p) {
    return splitting_type(k, p).has_degree_one();
}

namespace {

bool splits_completely(const FieldPtr& k, const Integer& p) {
    if (k->degree() == 1) return true;
    if (k->poly_disc() % p == 0) return false;
    if (k->degree() == 2) return kronecker(k->field_disc(), p) == 1;
    // all roots in F_p and squarefree mod p: x^p == x mod (f, p)
    ModPoly f = ModPoly::reduce(k->defining_poly(), p);
    ModPoly x = ModPoly::x(p);
    return x.powmod(p, f) == x;
}

}  // namespace

long count_split_primes(const FieldPtr& k, const Integer& x) {
    if (x < 2) throw std::invalid_argument("count_split_primes requires x >= 2");
    long n = 0;
    for (const auto& p : primes_up_to(x))
        if (splits_completely(k, p)) ++n;
    return n;
}

namespace {

// Largest integer T with T <= c_k^d, so product > c_k^d  <=>  product > T.
Integer threshold_floor(const FieldPtr& k) {
    Integer adisc = abs(k->field_disc());
    if (k->complex_places() == 0) return isqrt(adisc);  // c_k^d = |disc|^{1/2}
    for (mpfr_prec_t prec = 128; prec <= Real::kMaxPrec; prec *= 2) {
        Real t = k->field_constant_pow_d(prec);
        double lo = std::floor(t.lo_d()), hi = std::floor(t.hi_d());
        if (lo == hi) return Integer(lo);
    }
    throw PrecisionError("prime-set threshold inconclusive at precision cap");
}

struct SubsetSearch {
    const std::vector<Integer>& primes;
    Integer floor;  // need product > floor
    Integer best_product;
    std::vector<size_t> best_idx;
    bool found = false;

    void offer(const Integer& prod, const std::vector<size_t>& idx) {
        if (!found || prod < best_product ||
            (prod == best_product && idx.size() < best_idx.size()) ||
            (prod == best_product && idx.size() == best_idx.size() && idx < best_idx)) {
            found = true;
            best_product = prod;
            best_idx = idx;
        }
    }

    void dfs(size_t i, const Integer& prod, std::vector<size_t>& idx) {
        for (size_t j = i; j < primes.size(); ++j) {
            Integer np = prod * primes[j];
            if (found && np >= best_product && np > floor) {
                // ascending primes: later j only grows the product
                if (np == best_product) {
                    idx.push_back(j);
                    offer(np, idx);
                    idx.pop_back();
                }
                break;
            }
            idx.push_back(j);
            if (np > floor) {
                offer(np, idx);
                idx.pop_back();
                break;  // any further j or deeper subset is strictly larger
            }
            dfs(j + 1, np, idx);
            idx.pop_back();
        }
    }
};

}  // namespace

PrimeSet find_prime_set(const FieldPtr& k, const Integer& prime_bound) {
    if (prime_bound < 2) throw std::invalid_argument("prime_bound must be >= 2");
    std::vector<Integer> qual;
    std::vector<Integer> qual_root;
    for (const auto& p : primes_up_to(prime_bound)) {
        SplittingType st = splitting_type(k, p);
        std::optional<Integer> root;
        for (const auto& pr : st.pairs)
            if (pr.f == 1 && pr.root && (!root || *pr.root < *root)) root = pr.root;
        if (root) {
            qual.push_back(p);
            qual_root.push_back(*root);
        }
    }
    Integer T = threshold_floor(k);
    SubsetSearch search{qual, T, Integer(0), {}, false};
    std::vector<size_t> idx;
    search.dfs(0, Integer(1), idx);
    if (!search.found)
        throw NotFoundError("no qualifying prime subset exceeds the threshold within the bound");

    PrimeSet out{k, {}, {}, search.best_product, k->field_constant_pow_d(256)};
    for (size_t j : search.best_idx) {
        out.primes.push_back(qual[j]);
        out.roots.push_back(qual_root[j]);
    }
    // re-verify the strict threshold comparison with interval arithmetic
    for (mpfr_prec_t prec = 128;; prec *= 2) {
        if (Real(out.product, prec).surely_gt(k->field_constant_pow_d(prec))) break;
        if (prec >= Real::kMaxPrec)
            throw PrecisionError("prime-set product vs threshold inconclusive");
    }
    return out;
}

namespace {

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double li_adapt(double a, double b, double fa, double fm, double fb, double whole,
                double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = 1.0 / std::log(lm), frm = 1.0 / std::log(rm);
    double left = simpson(a, m, fa, flm, fm);
    double right = simpson(m, b, fm, frm, fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return li_adapt(a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           li_adapt(m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace

double logarithmic_integral(double x) {
    if (x < 2.0) throw std::domain_error("logarithmic_integral requires x >= 2");
    if (x == 2.0) return 0.0;
    double fa = 1.0 / std::log(2.0);
    double fb = 1.0 / std::log(x);
    double fm = 1.0 / std::log(0.5 * (2.0 + x));
    double whole = simpson(2.0, x, fa, fm, fb);
    return li_adapt(2.0, x, fa, fm, fb, whole, 1e-12, 60);
}

double lo_bound(double log_abs_disc, const Integer& degree, double x, double c1) {
    if (x < 2.0) throw std::invalid_argument("lo_bound requires x >= 2");
    if (c1 <= 0.0) throw std::invalid_argument("lo_bound requires c1 > 0");
    return c1 * std::sqrt(x) * (log_abs_disc + degree.get_d() * std::log(x));
}

ChebReport lemma51_report(const FieldPtr& k, const Rational& c1) {
    int d = k->degree();
    if (d < 2) throw std::invalid_argument("lemma51_report requires degree >= 2");
    Integer adisc = abs(k->field_disc());

    Integer fifteen_pow, fact, fact_pow;
    mpz_ui_pow_ui(fifteen_pow.get_mpz_t(), 15, 20);
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
    mpz_pow_ui(fact_pow.get_mpz_t(), fact.get_mpz_t(), 60);
    Rational c1_pow;
    mpz_pow_ui(c1_pow.get_num_mpz_t(), c1.get_num_mpz_t(), 20);
    mpz_pow_ui(c1_pow.get_den_mpz_t(), c1.get_den_mpz_t(), 20);

    ChebReport rep{c1,
                   Rational(fifteen_pow * fact_pow) * c1_pow,
                   false,
                   Real(adisc, 256).sqrt(),
                   (Real(2L, 256) * Real(adisc, 256).sqrt()),
                   0,
                   0.0};
    rep.hypothesis_met = rep.cheb_threshold <= Rational(adisc);

    // p in (|disc|^{1/2}, 2|disc|^{1/2}]  <=>  p^2 > |disc| and p^2 <= 4|disc|
    for (const auto& p : primes_up_to(2 * isqrt(adisc) + 2)) {
        Integer p2 = p * p;
        if (p2 > adisc && p2 <= 4 * adisc && splits_completely(k, p)) ++rep.window_count;
    }

    double x = 2.0 * std::sqrt(adisc.get_d());
    double c1d = c1.get_d();
    double f2 = fact.get_d() * fact.get_d();
    rep.tail_bound = 2.0 * c1d * f2 * std::sqrt(x) * (std::log(adisc.get_d()) + std::log(x));
    return rep;
}

FrobeniusCensus frobenius_census(const FieldPtr& k, const Integer& x) {
    if (x < 2) throw std::invalid_argument("frobenius_census requires x >= 2");
    FrobeniusCensus out;
    out.li = logarithmic_integral(std::max(2.0, x.get_d()));
    for (const auto& p : primes_up_to(x)) {
        if (k->degree() > 1 && k->poly_disc() % p == 0) continue;
        std::vector<int> pat;
        for (const auto& fac : factor_mod_p(k->defining_poly(), p))
            for (int i = 0; i < fac.multiplicity; ++i) pat.push_back(fac.factor.degree());
        std::sort(pat.begin(), pat.end());
        ++out.counts[pat];
        ++out.primes_used;
    }
    return out;
}

}  // namespace smallgen
