// End-to-end acceptance suite: one pass/fail line per criterion, nonzero
// exit when anything fails.  Each check recomputes its expected values from
// independent formulas or brute-force oracles.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "smallgen/adelic.hpp"
#include "smallgen/heights.hpp"
#include "smallgen/quadsharp.hpp"

using namespace smallgen;

namespace {

int failures = 0;

void report(int idx, const char* what, bool pass, double seconds) {
    std::printf("%s  criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", idx, what, seconds);
    if (!pass) ++failures;
}

void run(int idx, const char* what, const std::function<bool()>& body, double limit = 0.0) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = body();
    } catch (const std::exception& e) {
        std::printf("      exception: %s\n", e.what());
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0.0 && dt > limit) {
        std::printf("      over the %.0fs budget\n", limit);
        pass = false;
    }
    report(idx, what, pass, dt);
}

FieldPtr quad_m(long m) {  // Q(sqrt(m)), maximal order
    return NumberField::make({Integer(-m), Integer(0), Integer(1)});
}

// sign of A + B sqrt(m), m > 0, exact
int sign_quad(const Rational& A, const Rational& B, const Integer& m) {
    int sa = sgn(A), sb = sgn(B);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational diff = A * A - B * B * m;
    int sd = sgn(diff);
    return sd == 0 ? 0 : (sd > 0 ? sa : sb);
}

// brute-force box membership scan for quadratic fields with exact radii
std::set<QVec> naive_box(const IdealLattice& I, const std::vector<Rational>& radii) {
    const FieldPtr& k = I.field;
    std::set<QVec> out;
    const long N = 100;
    for (long n1 = -N; n1 <= N; ++n1) {
        for (long n2 = -N; n2 <= N; ++n2) {
            if (n1 == 0 && n2 == 0) continue;
            QVec oc = {Rational(n1) * I.basis_order[0][0] + Rational(n2) * I.basis_order[1][0],
                       Rational(n1) * I.basis_order[0][1] + Rational(n2) * I.basis_order[1][1]};
            FieldElement a = k->from_order_coords(oc);
            const Rational& x = a.coords()[0];
            const Rational& y = a.coords()[1];
            bool in = true;
            if (k->complex_places() == 1) {
                // modulus^2 = |N(alpha)| exactly
                Rational n = abs(norm_trace(a).first);
                in = n < radii[0] * radii[0];
            } else {
                // theta = sqrt(m); places ordered by the real roots ascending
                Integer m = -k->defining_poly().coeffs()[0];
                for (int v = 0; v < 2 && in; ++v) {
                    Rational B = v == 0 ? -y : y;
                    in = sign_quad(x - radii[v], B, m) < 0 &&
                         sign_quad(x + radii[v], B, m) > 0;
                }
            }
            if (in) out.insert(a.coords());
        }
    }
    return out;
}

Rational rand_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

bool criterion1() {
    auto [min_sq, witness] = minimal_quad_generator_height(Integer(-163));
    bool ok = min_sq == 41;
    ok = ok && witness.a == 1 && abs(witness.b) == 1 && witness.c == 41;
    ok = ok && witness.poly().degree() == 2;
    ok = ok && enumerate_quad_generators(Integer(-163), Integer(40)).empty();
    return ok;
}

bool criterion2() {
    FieldPtr k = NumberField::make({Integer(41), Integer(1), Integer(1)});
    bool ok = std::fabs(k->field_constant(256).mid() - 2.850932682) < 1e-3;
    PrimeSet ps = find_prime_set(k, 10000);
    ok = ok && ps.primes == std::vector<Integer>{41};
    ok = ok && std::fabs(std::sqrt(ps.product.get_d()) - 6.403124237) < 1e-3;
    ok = ok && std::fabs(ps.threshold.mid() - 8.12781705) < 1e-3;
    return ok;
}

bool criterion3() {
    bool ok = true;
    for (long m = 2; m <= 50; ++m) {
        if (squarefree_part(Integer(m)) != m) continue;
        FieldPtr k = quad_m(m);
        auto cert = find_generator_real(k, 0, 1e-6);
        bool this_ok = cert.minimal_poly.degree() == 2 && verify_certificate(cert) &&
                       cert.height.value.mid() <= k->field_constant(256).mid() + 1e-9;
        if (!this_ok) std::printf("      m = %ld fails\n", m);
        ok = ok && this_ok;
    }
    return ok;
}

bool criterion4() {
    bool ok = true;
    for (long m : {1L, 2L, 3L, 7L, 11L, 19L, 43L, 67L, 163L}) {
        FieldPtr k = NumberField::make({Integer(m), Integer(0), Integer(1)});
        PrimeSet ps = find_prime_set(k, 10000);
        auto cert = find_generator_padic(k, ps);
        bool this_ok = verify_certificate(cert);
        this_ok = this_ok && cert.height.value.mid() <= std::sqrt(ps.product.get_d()) + 1e-9;
        this_ok = this_ok && cert.equality_places == 1;
        if (m == 1) {
            this_ok = this_ok && ps.primes == std::vector<Integer>{2};
            this_ok = this_ok && cert.height.exact_square && *cert.height.exact_square == 2;
        }
        if (!this_ok) std::printf("      m = -%ld fails\n", m);
        ok = ok && this_ok;
    }
    return ok;
}

bool criterion5() {
    std::vector<FieldPtr> fields = {quad_m(-1), quad_m(2), quad_m(5),
                                    NumberField::make({Integer(41), Integer(1), Integer(1)})};
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> num(1, 40);
    bool ok = true;
    for (const auto& k : fields) {
        int r = k->real_places(), s = k->complex_places();
        // unit radii against the closed-form decomposition
        std::vector<Real> unit(k->arch_places(), Real(1L, 512));
        double expect = std::pow(2.0, r) * std::pow(2.0 * M_PI, s) /
                        std::sqrt(std::fabs(k->field_disc().get_d()));
        ok = ok && std::fabs(box_measure(k, unit, Rational(1), 512).mid() - expect) < 1e-12;
        // boundary: product of radii = c_k gives exactly 2^d
        std::vector<Real> boundary(k->arch_places(), Real(1L, 512));
        boundary[0] = k->field_constant(512);
        double two_d = std::pow(2.0, k->degree());
        ok = ok && std::fabs(box_measure(k, boundary, Rational(1), 512).mid() - two_d) < 1e-12;
        // guarantee iff measure > 2^d
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Real> gamma;
            for (int v = 0; v < k->arch_places(); ++v)
                gamma.push_back(Real(Rational(num(rng), 10), 512));
            bool g = minkowski_guarantee(k, gamma, Rational(1));
            double mmid = box_measure(k, gamma, Rational(1), 512).mid();
            ok = ok && (g == (mmid > two_d));
        }
    }
    return ok;
}

bool criterion6() {
    std::vector<FieldPtr> fields = {quad_m(-1), quad_m(2), quad_m(5), quad_m(-163), quad_m(6)};
    std::mt19937 rng(4096);
    bool ok = true;
    int agree = 0, resid = 0;
    while (agree < 500 || resid < 200) {
        const auto& k = fields[rng() % fields.size()];
        Rational a = rand_rational(rng), b = rand_rational(rng);
        if (a == 0 && b == 0) continue;
        FieldElement x = k->element({a, b});
        if (agree < 500) {
            Real h1 = weil_height(x, 256).value;
            Real h2 = height_embedding_route(x, 256);
            ok = ok && std::fabs(h1.mid() - h2.mid()) < 1e-12;
            ++agree;
        }
        if (resid < 200) {
            Real res = product_formula_residual(x, 256);
            ok = ok && res.contains_zero() && std::fabs(res.mid()) < 1e-12;
            ++resid;
        }
    }
    return ok;
}

bool criterion7() {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> ai(1, 12), bi(-25, 25), ei(1, 4);
    std::vector<long> rads = {-1, -2, -3, -5, -7, -11, -15, -19, -31, -163};
    bool ok = true;
    int made = 0;
    while (made < 1000) {
        Integer a = ai(rng), b = bi(rng), e = ei(rng), d = rads[rng() % rads.size()];
        Integer num = b * b - d * e * e;
        if (num <= 0 || num % (4 * a) != 0) continue;
        Integer c = num / (4 * a);
        if (c < 1 || gcd(gcd(a, b), c) != 1) continue;
        QuadPoly q{a, b, c, e, d};
        Integer expect = quad_root_height(q);
        if (expect != std::max(q.a, q.c)) ok = false;
        // root (-b + e sqrt(d)) / (2a) in Q(sqrt(d))
        FieldPtr k = quad_m(d.get_si());
        FieldElement alpha = k->element({Rational(-b) / Rational(2 * a),
                                         Rational(e) / Rational(2 * a)});
        auto h = weil_height(alpha, 256);
        if (!h.exact_square || *h.exact_square != expect) {
            std::printf("      mismatch at a=%s b=%s c=%s e=%s d=%s\n", a.get_str().c_str(),
                        b.get_str().c_str(), c.get_str().c_str(), e.get_str().c_str(),
                        d.get_str().c_str());
            ok = false;
        }
        ++made;
    }
    return ok;
}

bool criterion8() {
    FieldPtr gauss = quad_m(-1);
    long x = 100000;
    long split = count_split_primes(gauss, Integer(x));
    double li = logarithmic_integral(static_cast<double>(x));
    double tol = lo_bound(std::log(4.0), Integer(2), static_cast<double>(x), 1.0);
    bool ok = std::fabs(static_cast<double>(split) - li / 2.0) <= tol;

    FieldPtr cubic = NumberField::make({Integer(-1), Integer(-1), Integer(0), Integer(1)});
    FrobeniusCensus c = frobenius_census(cubic, Integer(10000));
    double n = static_cast<double>(c.primes_used);
    ok = ok && std::fabs(c.counts[{1, 1, 1}] / n - 1.0 / 6.0) < 0.05;
    ok = ok && std::fabs(c.counts[{1, 2}] / n - 1.0 / 2.0) < 0.05;
    ok = ok && std::fabs(c.counts[{3}] / n - 1.0 / 3.0) < 0.05;

    auto rep = lemma51_report(NumberField::make({Integer(41), Integer(1), Integer(1)}),
                              Rational(1));
    ok = ok && !rep.hypothesis_met && rep.window_count == 0;
    return ok;
}

bool criterion9() {
    bool ok = true;
    struct Case {
        IdealLattice I;
        std::vector<Rational> radii;
        long expect = -1;  // optional exact count
    };
    FieldPtr gi = quad_m(-1);
    FieldPtr g163 = NumberField::make({Integer(41), Integer(1), Integer(1)});
    FieldPtr r2 = quad_m(2);
    FieldPtr r5 = quad_m(5);
    std::vector<Case> cases;
    cases.push_back({ideal_inverse(prime_ideal(gi, 2, 1)), {Rational(1)}, 4});
    cases.push_back({order_ideal(gi), {Rational(1)}, 0});
    cases.push_back({order_ideal(gi), {Rational(4)}, -1});
    cases.push_back({ideal_inverse(prime_ideal(gi, 5, 2)), {Rational(1)}, -1});
    cases.push_back({order_ideal(g163), {Rational(4)}, -1});
    cases.push_back({ideal_inverse(prime_ideal(g163, 41, 0)), {Rational(1)}, -1});
    cases.push_back({order_ideal(r2), {Rational(4), Rational(4)}, -1});
    cases.push_back({order_ideal(r2), {Rational(3), Rational(1, 2)}, -1});
    cases.push_back({order_ideal(r5), {Rational(4), Rational(4)}, -1});
    for (size_t i = 0; i < cases.size(); ++i) {
        const auto& cs = cases[i];
        std::vector<PlaceRadius> radii;
        for (const auto& r : cs.radii) radii.push_back(PlaceRadius::rational(r));
        auto pts = enumerate_box(cs.I, radii);
        std::set<QVec> fast;
        for (const auto& p : pts) fast.insert(p.coords());
        std::set<QVec> slow = naive_box(cs.I, cs.radii);
        bool this_ok = fast == slow && fast.size() == pts.size();
        if (cs.expect >= 0) this_ok = this_ok && static_cast<long>(pts.size()) == cs.expect;
        if (!this_ok) std::printf("      case %zu: fast %zu vs naive %zu\n", i, fast.size(),
                                  slow.size());
        ok = ok && this_ok;
    }
    return ok;
}

}  // namespace

int main() {
    run(1, "minimal generator height 41 for radicand -163, empty below", criterion1, 5.0);
    run(2, "field constant, prime set, and bound for the sharp example", criterion2);
    run(3, "real-place generator search over real quadratic fields", criterion3, 60.0);
    run(4, "p-adic generator certificates over imaginary quadratic fields", criterion4);
    run(5, "box measure identities and the Minkowski guarantee", criterion5);
    run(6, "height route agreement and the product formula", criterion6);
    run(7, "exact squared height of quadratic generators", criterion7);
    run(8, "split-prime counts against the logarithmic integral", criterion8, 30.0);
    run(9, "box enumeration against the brute-force scan", criterion9);
    if (failures == 0) {
        std::printf("all 9 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
