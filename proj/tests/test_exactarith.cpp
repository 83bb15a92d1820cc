#include <doctest.h>

#include <random>

#include "smallgen/intpoly.hpp"
#include "smallgen/linalg.hpp"
#include "smallgen/modpoly.hpp"
#include "smallgen/roots.hpp"

using namespace smallgen;

TEST_CASE("resultants against hand-checked values") {
    CHECK(poly_resultant(IntPoly({-2, 1}), IntPoly({-3, 1})) == -1);
    CHECK(poly_resultant(IntPoly({-2, 0, 1}), IntPoly({-3, 0, 1})) == 1);
    CHECK(poly_resultant(IntPoly({41, 1, 1}), IntPoly({1, 2})) == 163);
    // res(f, g) = (-1)^{deg f deg g} res(g, f)
    IntPoly f({1, 3, 0, 1}), g({-5, 2, 1});
    CHECK(poly_resultant(f, g) == poly_resultant(g, f));
}

TEST_CASE("resultant is multiplicative in each argument") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coeff(-6, 6);
    for (int trial = 0; trial < 30; ++trial) {
        auto rand_poly = [&](int deg) {
            std::vector<Integer> c;
            for (int i = 0; i < deg; ++i) c.emplace_back(coeff(rng));
            c.emplace_back(coeff(rng) == 0 ? 1 : coeff(rng));
            if (c.back() == 0) c.back() = 1;
            return IntPoly(c);
        };
        IntPoly a = rand_poly(2), b = rand_poly(2), c = rand_poly(3);
        CHECK(poly_resultant(a * b, c) == poly_resultant(a, c) * poly_resultant(b, c));
    }
}

TEST_CASE("discriminants") {
    CHECK(poly_discriminant(IntPoly({41, 1, 1})) == -163);
    CHECK(poly_discriminant(IntPoly({-1, -1, 0, 1})) == -23);
    CHECK(poly_discriminant(IntPoly({1, 0, 1})) == -4);
    CHECK(poly_discriminant(IntPoly({-2, 0, 1})) == 8);
    // disc(x^2 + bx + c) = b^2 - 4c
    for (long b = -4; b <= 4; ++b)
        for (long c = -4; c <= 4; ++c)
            CHECK(poly_discriminant(IntPoly({c, b, 1})) == b * b - 4 * c);
}

TEST_CASE("rational gcd and squarefree detection") {
    IntPoly f({-1, 0, 1});       // (x-1)(x+1)
    IntPoly g({1, 2, 1});        // (x+1)^2
    CHECK(poly_gcd(f, g) == IntPoly({1, 1}));
    CHECK(is_squarefree(f));
    CHECK_FALSE(is_squarefree(g));
    CHECK(is_squarefree(IntPoly({41, 1, 1})));
}

TEST_CASE("Sturm root counting") {
    CHECK(real_root_count(IntPoly({-1, -1, 0, 1})) == 1);  // x^3 - x - 1
    CHECK(real_root_count(IntPoly({41, 1, 1})) == 0);
    CHECK(real_root_count(IntPoly({-2, 0, 1})) == 2);
    CHECK(real_root_count_in(IntPoly({-2, 0, 1}), Rational(0), Rational(2)) == 1);
    CHECK(real_root_count_in(IntPoly({-1, -1, 1}), Rational(-1), Rational(1)) == 1);
    CHECK(real_root_count_in(IntPoly({-1, -1, 1}), Rational(1), Rational(2)) == 1);
}

TEST_CASE("real root isolation") {
    IntPoly f({-2, 0, 1});
    auto iv = isolate_real_roots(f, Rational(1, 1024));
    REQUIRE(iv.size() == 2);
    CHECK(iv[0].second - iv[0].first <= Rational(1, 1024));
    CHECK(iv[0].second < iv[1].first);
    // exact rational root comes back degenerate
    auto rv = isolate_real_roots(IntPoly({-6, 1, 1}), Rational(1, 64));  // (x-2)(x+3)
    REQUIRE(rv.size() == 2);
    for (const auto& [a, b] : rv)
        if (a == b) CHECK((a == 2 || a == -3));
}

TEST_CASE("factorization mod p") {
    auto fac = factor_mod_p(IntPoly({1, 0, 1}), 5);
    REQUIRE(fac.size() == 2);
    // x^2 + 1 = (x + 2)(x + 3) mod 5, factors ordered by coefficients
    CHECK(fac[0].factor.linear_root() == 3);
    CHECK(fac[1].factor.linear_root() == 2);

    auto f2 = factor_mod_p(IntPoly({1, 0, 1}), 2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].multiplicity == 2);
    CHECK(f2[0].factor.linear_root() == 1);

    // x^3 - x - 1 mod 23 ramifies: disc = -23
    auto f23 = factor_mod_p(IntPoly({-1, -1, 0, 1}), 23);
    int total = 0;
    for (const auto& fc : f23) total += fc.factor.degree() * fc.multiplicity;
    CHECK(total == 3);
}

TEST_CASE("factorization mod p reconstructs the input") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(0, 30);
    std::vector<Integer> ps = {2, 3, 5, 31};
    for (int trial = 0; trial < 40; ++trial) {
        for (const auto& p : ps) {
            std::vector<Integer> c;
            for (int i = 0; i < 4; ++i) c.emplace_back(coeff(rng));
            c.emplace_back(1);
            IntPoly f(c);
            ModPoly prod(p, {1});
            for (const auto& fc : factor_mod_p(f, p))
                for (int m = 0; m < fc.multiplicity; ++m)
                    prod = prod * ModPoly(p, std::vector<Integer>(fc.factor.coeffs()));
            CHECK(prod == ModPoly::reduce(f, p));
        }
    }
}

TEST_CASE("certified roots of the worked quadratic") {
    auto roots = certified_roots(IntPoly({41, 1, 1}), 1e-30);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) {
        CHECK_FALSE(r.is_real);
        Real mod2 = r.enclosure().abs2();
        CHECK(mod2.contains(Rational(41)));  // conjugate pair at modulus sqrt(41)
    }
}

TEST_CASE("certified roots evaluate to zero enclosures") {
    IntPoly f({-1, -1, 0, 1});
    for (const auto& r : certified_roots(f, 1e-35)) {
        Complex v = f.eval(r.enclosure());
        CHECK(v.re.contains_zero());
        CHECK(v.im.contains_zero());
    }
}

TEST_CASE("irreducibility certificates") {
    CHECK(irreducibility_check(IntPoly({41, 1, 1})).status == IrredStatus::proved_irreducible);
    CHECK(irreducibility_check(IntPoly({-1, -1, 0, 1})).status == IrredStatus::proved_irreducible);
    auto red = irreducibility_check(IntPoly({-1, 0, 1}));
    CHECK(red.status == IrredStatus::proved_reducible);
    REQUIRE(red.witness_factor.has_value());
    CHECK(IntPoly({-1, 0, 1}).divide_exact(*red.witness_factor).has_value());
    // x^4 + 1 has no rational roots and no mod-p witness; the quadratic scan decides
    CHECK(irreducibility_check(IntPoly({1, 0, 0, 0, 1})).status == IrredStatus::proved_irreducible);
}

TEST_CASE("interval arithmetic encloses exact rational results") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 20);
    for (int trial = 0; trial < 200; ++trial) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        a.canonicalize();
        b.canonicalize();
        Real ra(a, 64), rb(b, 64);
        CHECK((ra + rb).contains(a + b));
        CHECK((ra - rb).contains(a - b));
        CHECK((ra * rb).contains(a * b));
        if (b != 0) CHECK((ra / rb).contains(a / b));
        CHECK(ra.sqr().contains(a * a));
    }
}

TEST_CASE("hermite normal form is canonical") {
    ZMat rows = {{2, 1}, {0, 3}, {4, 5}};
    ZMat h = hnf(rows);
    REQUIRE(h.size() == 2);
    CHECK(h[0][0] > 0);
    CHECK(h[1][1] > 0);
    CHECK(h[1][0] == 0);
    CHECK(h[0][1] >= 0);
    CHECK(h[0][1] < h[1][1]);
    // permuting or row-combining the generators leaves the HNF unchanged
    CHECK(hnf({{4, 5}, {2, 1}, {0, 3}}) == h);
    CHECK(hnf({{2, 1}, {2, 4}, {4, 5}}) == h);
}

TEST_CASE("lattice intersection") {
    // 2Z^2 intersect 3Z^2 = 6Z^2
    QMat a = {{Rational(2), Rational(0)}, {Rational(0), Rational(2)}};
    QMat b = {{Rational(3), Rational(0)}, {Rational(0), Rational(3)}};
    QMat c = hnf_q(lattice_intersect(a, b));
    CHECK(lattice_covolume(c) == 36);
    CHECK(lattice_contains(c, {Rational(6), Rational(0)}));
    CHECK_FALSE(lattice_contains(c, {Rational(3), Rational(0)}));
}

TEST_CASE("number theory helpers") {
    CHECK(squarefree_part(Integer(12)) == 3);
    CHECK(squarefree_part(Integer(-12)) == -3);
    CHECK(squarefree_part(Integer(7)) == 7);
    CHECK(primes_up_to(Integer(20)) ==
          std::vector<Integer>({2, 3, 5, 7, 11, 13, 17, 19}));
    CHECK(is_prime(Integer(163)));
    CHECK_FALSE(is_prime(Integer(161)));
    CHECK(kronecker(Integer(-163), Integer(41)) == 1);
    CHECK(kronecker(Integer(-163), Integer(3)) == -1);
}
