#include "smallgen/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "smallgen/modpoly.hpp"

namespace smallgen {

namespace {

std::vector<std::complex<double>> aberth_roots(const IntPoly& f) {
    int d = f.degree();
    std::vector<double> c(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c[static_cast<size_t>(i)] = f[i].get_d();
    auto eval = [&](std::complex<double> z) {
        std::complex<double> v = 0, dv = 0;
        for (int i = d; i >= 0; --i) {
            dv = dv * z + v;
            v = v * z + c[static_cast<size_t>(i)];
        }
        return std::pair{v, dv};
    };
    double bound = 0;
    for (int i = 0; i < d; ++i) bound = std::max(bound, std::abs(c[static_cast<size_t>(i)] / c[static_cast<size_t>(d)]));
    bound += 1.0;
    std::vector<std::complex<double>> z(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        double ang = 2 * M_PI * i / d + 0.4;
        z[static_cast<size_t>(i)] = std::polar(bound * 0.7, ang);
    }
    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0;
        for (int i = 0; i < d; ++i) {
            auto [v, dv] = eval(z[static_cast<size_t>(i)]);
            if (dv == std::complex<double>(0)) continue;
            std::complex<double> w = v / dv;
            std::complex<double> sum = 0;
            for (int j = 0; j < d; ++j)
                if (j != i) sum += 1.0 / (z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
            std::complex<double> corr = w / (1.0 - w * sum);
            z[static_cast<size_t>(i)] -= corr;
            worst = std::max(worst, std::abs(corr));
        }
        if (worst < 1e-14 * bound) break;
    }
    return z;
}

// One Newton step in point mpfr arithmetic, collapsing interval growth.
Complex newton_refine(const IntPoly& f, const IntPoly& fp, Complex z, int steps) {
    for (int i = 0; i < steps; ++i) {
        Complex v = f.eval(z);
        Complex dv = fp.eval(z);
        if (dv.abs2().contains_zero()) break;
        z = (z - v / dv).midpoint();
    }
    return z;
}

}  // namespace

std::vector<CertifiedRoot> certified_roots(const IntPoly& f, double target_radius) {
    if (f.degree() < 1) throw std::invalid_argument("certified_roots requires degree >= 1");
    if (!is_squarefree(f)) throw std::invalid_argument("certified_roots requires squarefree input");
    const int d = f.degree();

    if (d == 1) {
        Rational root(-f[0], f[1]);
        root.canonicalize();
        mpfr_prec_t prec = 256;
        Real re(root, prec);
        CertifiedRoot r{re.midpoint_real(), Real(0L, prec), re.rad(), true};
        return {r};
    }

    IntPoly fp = f.derivative();
    auto seeds = aberth_roots(f);

    for (mpfr_prec_t prec = 256; prec <= Real::kMaxPrec; prec *= 2) {
        // Real roots: exact Sturm isolation refined to the target width.
        Rational width(1);
        double need = target_radius / 4;
        while (width.get_d() > need) width /= 65536;
        auto intervals = isolate_real_roots(f, width);

        std::vector<CertifiedRoot> roots;
        for (auto& [a, b] : intervals) {
            Rational mid = (a + b) / 2;
            Real center(mid, prec);
            double rad = center.rad() + Rational((b - a) / 2).get_d() * (1 + 1e-9);
            if (a == b) rad = center.rad();
            roots.push_back({center.midpoint_real(), Real(0L, prec), rad, true});
        }
        int n_real = static_cast<int>(roots.size());
        int n_pairs = (d - n_real) / 2;

        // Complex representatives: Newton-polished seeds with a posteriori
        // disk certification via the bound min_i |z - alpha_i| <= d |f(z)/f'(z)|.
        std::vector<CertifiedRoot> reps;
        bool ok = true;
        std::vector<Complex> picked;
        for (auto s : seeds) {
            if (s.imag() > 1e-9 * (1 + std::abs(s.real()))) {
                Complex z(Real::from_double(s.real(), prec), Real::from_double(s.imag(), prec));
                picked.push_back(newton_refine(f, fp, z, 40));
            }
        }
        if (static_cast<int>(picked.size()) != n_pairs) ok = false;
        if (ok) {
            for (auto& z : picked) {
                Real num = f.eval(z).abs();
                Real den = fp.eval(z).abs();
                if (!den.surely_positive()) {
                    ok = false;
                    break;
                }
                double rad = (num / den).hi_d() * d * (1 + 1e-12);
                if (!(rad <= target_radius) || !(z.im.lo_d() > rad)) {
                    ok = false;
                    break;
                }
                reps.push_back({z.re, z.im, rad, false});
            }
        }
        if (ok) {
            std::sort(reps.begin(), reps.end(), [](const CertifiedRoot& x, const CertifiedRoot& y) {
                double xi = x.im.mid(), yi = y.im.mid();
                if (xi != yi) return xi < yi;
                return x.re.mid() < y.re.mid();
            });
            for (auto& r : reps) {
                roots.push_back(r);
                roots.push_back({r.re, -r.im, r.radius, false});
            }
            // pairwise disjointness of all deg(f) disks
            for (size_t i = 0; i < roots.size() && ok; ++i) {
                for (size_t j = i + 1; j < roots.size() && ok; ++j) {
                    Real dx = roots[i].re - roots[j].re;
                    Real dy = (roots[i].is_real ? Real(0L, prec) : roots[i].im) -
                              (roots[j].is_real ? Real(0L, prec) : roots[j].im);
                    Real dist2 = dx.sqr() + dy.sqr();
                    double rr = roots[i].radius + roots[j].radius;
                    if (!dist2.surely_gt(Real::from_double(rr, prec).sqr())) ok = false;
                }
            }
        }
        if (ok && static_cast<int>(roots.size()) == d) return roots;
    }
    throw PrecisionError("certified_roots: precision cap reached");
}

// ---------------------------------------------------------------------------

namespace {

std::optional<Rational> find_rational_root(const IntPoly& f) {
    // Candidates u/v with u | f[0], v | lc(f).  When f(0) == 0 the root is 0.
    if (f[0] == 0) return Rational(0);
    std::vector<Integer> nums, dens;
    Integer c0 = abs(f[0]), cl = abs(f.lc());
    for (Integer u = 1; u * u <= c0; ++u)
        if (c0 % u == 0) {
            nums.push_back(u);
            nums.push_back(c0 / u);
        }
    for (Integer v = 1; v * v <= cl; ++v)
        if (cl % v == 0) {
            dens.push_back(v);
            dens.push_back(cl / v);
        }
    for (const auto& u : nums)
        for (const auto& v : dens)
            for (int s : {1, -1}) {
                Rational cand(s * u, v);
                cand.canonicalize();
                if (f.eval(cand) == 0) return cand;
            }
    return std::nullopt;
}

}  // namespace

IrredResult irreducibility_check(const IntPoly& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("irreducibility_check requires degree >= 1");
    if (d == 1) return {IrredStatus::proved_irreducible, std::nullopt, std::nullopt};

    IntPoly g = poly_gcd(f, f.derivative());
    if (g.degree() > 0) return {IrredStatus::proved_reducible, g, std::nullopt};

    if (auto root = find_rational_root(f)) {
        IntPoly factor({-root->get_num(), root->get_den()});
        return {IrredStatus::proved_reducible, factor.primitive_part(), std::nullopt};
    }

    // mod-p witness
    Integer disc = poly_discriminant(f);
    for (const Integer& p : primes_up_to(200)) {
        if (f.lc() % p == 0 || disc % p == 0) continue;
        auto factors = factor_mod_p(f, p);
        if (factors.size() == 1 && factors[0].multiplicity == 1 &&
            factors[0].factor.degree() == d)
            return {IrredStatus::proved_irreducible, std::nullopt, p};
    }

    if (d <= 3) {
        // primitive, no rational root
        return {IrredStatus::proved_irreducible, std::nullopt, std::nullopt};
    }
    if (d == 4) {
        // exclude quadratic factors with the Mignotte coefficient bound
        Rational norm2_sq = 0;
        for (const auto& c : f.coeffs()) norm2_sq += Rational(c * c);
        double bound_per_lc = 4.0 * std::sqrt(norm2_sq.get_d()) / std::abs(f.lc().get_d());
        Integer cl = abs(f.lc());
        for (Integer a2 = 1; a2 <= cl; ++a2) {
            if (cl % a2 != 0) continue;
            Integer cb(static_cast<long>(std::ceil(bound_per_lc * a2.get_d())) + 1);
            for (Integer a1 = -cb; a1 <= cb; ++a1)
                for (Integer a0 = -cb; a0 <= cb; ++a0) {
                    IntPoly cand(std::vector<Integer>{a0, a1, a2});
                    if (cand.degree() != 2) continue;
                    if (auto q = f.divide_exact(cand))
                        return {IrredStatus::proved_reducible, cand, std::nullopt};
                }
        }
        return {IrredStatus::proved_irreducible, std::nullopt, std::nullopt};
    }
    return {IrredStatus::unknown, std::nullopt, std::nullopt};
}

}  // namespace smallgen
