#include "smallgen/heights.hpp"

#include <cmath>

namespace smallgen {

Real mahler_measure(const IntPoly& f, mpfr_prec_t prec) {
    if (f.is_zero()) throw std::invalid_argument("Mahler measure of zero polynomial");
    if (f.degree() == 0) return Real(Integer(abs(f.lc())), prec);
    IntPoly g = f;
    // deflate repeated factors: M(f) = M(sqfree part)^? -- multiplicities matter,
    // but every caller passes squarefree polynomials (minimal polynomials).
    if (!is_squarefree(g)) {
        // factor out the gcd with the derivative and recurse
        IntPoly h = poly_gcd(g, g.derivative());
        auto q = g.divide_exact(h);
        if (!q) throw std::logic_error("deflation failed");
        return mahler_measure(*q, prec) * mahler_measure(h, prec);
    }
    for (mpfr_prec_t p = prec; p <= Real::kMaxPrec; p *= 2) {
        double target = std::pow(2.0, -std::min<double>(static_cast<double>(p) / 2 + 20, 900));
        auto roots = certified_roots(g, target);
        Real m(Integer(abs(g.lc())), p);
        bool sharp = true;
        for (const auto& r : roots) {
            Real mod = r.is_real ? r.re.widened(r.radius).abs()
                                 : r.enclosure().abs();
            if (mod.contains(Rational(1)) && !(mod.hi_d() == 1.0 && mod.lo_d() == 1.0)) {
                if (p < Real::kMaxPrec) {
                    sharp = false;
                    break;
                }
                // straddle fallback: keep the explicit error interval
            }
            m = m * mod.max1();
        }
        if (sharp) return m;
    }
    throw PrecisionError("mahler_measure: precision cap reached");
}

std::optional<Integer> exact_height_square(const IntPoly& m) {
    if (m.degree() == 1) {
        Integer h = std::max(abs(m[0]), abs(m[1]));
        return h * h;
    }
    if (m.degree() == 2) {
        Integer disc = m[1] * m[1] - 4 * m[2] * m[0];
        if (disc < 0) {
            // both roots have modulus sqrt(c/a): M = max(a, c)
            return std::max(m[2], m[0]);
        }
        // real quadratic: exact only when both roots are inside or outside
        // the unit circle (min_poly is irreducible, so no root at +-1)
        int inside = real_root_count_in(m, Rational(-1), Rational(1));
        if (inside == 2) return abs(m[2]);
        if (inside == 0) return abs(m[0]);
    }
    return std::nullopt;
}

HeightValue weil_height(const FieldElement& alpha, mpfr_prec_t prec) {
    if (alpha.is_zero()) return {Real(1L, prec), Integer(1)};
    IntPoly m = min_poly(alpha);
    Real mm = mahler_measure(m, prec);
    Real h = mm.rootn(static_cast<unsigned long>(m.degree()));
    return {h, exact_height_square(m)};
}

Real height_embedding_route(const FieldElement& alpha, mpfr_prec_t prec) {
    if (alpha.is_zero()) throw std::invalid_argument("height_embedding_route requires alpha != 0");
    auto places = embed(alpha, prec);
    Real h(1L, prec);
    for (const auto& pv : places) h = h * pv.normalized.max1();
    auto [den, num] = element_ideal_indices(alpha);
    (void)num;
    h = h * Real(den, prec).rootn(static_cast<unsigned long>(alpha.field()->degree()));
    return h;
}

Real product_formula_residual(const FieldElement& alpha, mpfr_prec_t prec) {
    if (alpha.is_zero()) throw std::invalid_argument("product formula requires alpha != 0");
    auto places = embed(alpha, prec);
    Real sum(0L, prec);
    for (const auto& pv : places) sum = sum + pv.normalized.log();
    auto [den, num] = element_ideal_indices(alpha);
    unsigned long d = static_cast<unsigned long>(alpha.field()->degree());
    // finite part: |alpha|_v products give N(alpha O)^{-1/d} = (num/den)^{-1/d}
    Real finite = (Real(den, prec) / Real(num, prec)).rootn(d).log();
    return sum + finite;
}

}  // namespace smallgen
