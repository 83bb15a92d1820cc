#include <doctest.h>

#include <cmath>

#include "smallgen/numberfield.hpp"

using namespace smallgen;

namespace {

FieldPtr gauss() { return NumberField::make({Integer(1), Integer(0), Integer(1)}); }

FieldPtr quad163() { return NumberField::make({Integer(41), Integer(1), Integer(1)}); }

}  // namespace

TEST_CASE("worked example field: x^2 + x + 41") {
    FieldPtr k = quad163();
    CHECK(k->degree() == 2);
    CHECK(k->field_disc() == -163);
    CHECK(k->poly_disc() == -163);
    CHECK(k->real_places() == 0);
    CHECK(k->complex_places() == 1);
    // c_k = (2/pi)^{1/2} |163|^{1/4} = 2.850...
    CHECK(std::fabs(k->field_constant(256).mid() - 2.8509326821) < 1e-9);
    CHECK(std::fabs(k->field_constant_pow_d(256).mid() - 8.1278171) < 1e-6);
}

TEST_CASE("gaussian field basics") {
    FieldPtr k = gauss();
    CHECK(k->field_disc() == -4);
    CHECK(std::fabs(k->field_constant(256).mid() - 1.1283791671) < 1e-9);
    FieldElement i = k->theta();
    CHECK(i * i == k->element({Rational(-1), Rational(0)}));
    FieldElement inv = elem_inverse(k->element({Rational(1), Rational(1)}));
    CHECK(inv == k->element({Rational(1, 2), Rational(-1, 2)}));
}

TEST_CASE("maximal quadratic orders") {
    // x^2 - 5: poly disc 20, field disc 5, order basis contains (1 + theta)/2
    FieldPtr k = NumberField::make({Integer(-5), Integer(0), Integer(1)});
    CHECK(k->field_disc() == 5);
    CHECK(k->order_disc() == 5);
    CHECK(k->real_places() == 2);
    FieldElement omega = k->from_order_coords({Rational(0), Rational(1)});
    CHECK(min_poly(omega) == IntPoly({-1, -1, 1}));

    // x^2 + 7: index 2, second basis element (1 + theta)/2 with x^2 - x + 2
    FieldPtr k7 = NumberField::make({Integer(7), Integer(0), Integer(1)});
    CHECK(k7->field_disc() == -7);
    CHECK(k7->poly_disc() == -28);
    FieldElement w = k7->from_order_coords({Rational(0), Rational(1)});
    CHECK(min_poly(w) == IntPoly({2, -1, 1}));

    // x^2 + 163 also lands on field disc -163
    FieldPtr k163 = NumberField::make({Integer(163), Integer(0), Integer(1)});
    CHECK(k163->field_disc() == -163);
}

TEST_CASE("reducible and invalid defining polynomials are rejected") {
    CHECK_THROWS_AS(NumberField::make({Integer(-1), Integer(0), Integer(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(NumberField::make({Integer(1), Integer(0), Integer(2)}),
                    std::invalid_argument);  // not monic
    // degree one is the rational field, allowed
    FieldPtr q = NumberField::make({Integer(-1), Integer(1)});
    CHECK(q->degree() == 1);
    CHECK(q->field_disc() == 1);
}

TEST_CASE("norm and trace") {
    FieldPtr k = gauss();
    auto [n, t] = norm_trace(k->element({Rational(1), Rational(1)}));
    CHECK(n == 2);
    CHECK(t == 2);
    auto [n2, t2] = norm_trace(quad163()->theta());
    CHECK(n2 == 41);   // product of roots of x^2 + x + 41
    CHECK(t2 == -1);
}

TEST_CASE("minimal polynomials") {
    FieldPtr k = NumberField::make({Integer(-5), Integer(0), Integer(1)});
    FieldElement phiish = k->element({Rational(1, 2), Rational(1, 2)});
    CHECK(min_poly(phiish) == IntPoly({-1, -1, 1}));
    CHECK(min_poly(k->element({Rational(3), Rational(0)})) == IntPoly({-3, 1}));
    FieldElement half_i = gauss()->element({Rational(1, 2), Rational(1, 2)});
    CHECK(min_poly(half_i) == IntPoly({1, -2, 2}));  // 2x^2 - 2x + 1
}

TEST_CASE("archimedean embeddings carry certified values") {
    FieldPtr k = gauss();
    auto places = embed(k->element({Rational(1), Rational(1)}), 256);
    REQUIRE(places.size() == 1);
    CHECK(places[0].local_degree == 2);
    CHECK(places[0].unnormalized.contains(Rational(0)) == false);
    CHECK(std::fabs(places[0].unnormalized.mid() - std::sqrt(2.0)) < 1e-12);
    // normalized = unnormalized^{2/2} here
    CHECK(std::fabs(places[0].normalized.mid() - std::sqrt(2.0)) < 1e-12);

    FieldPtr r = NumberField::make({Integer(-2), Integer(0), Integer(1)});
    auto pr = embed(r->element({Rational(1), Rational(1)}), 256);  // 1 + sqrt(2)
    REQUIRE(pr.size() == 2);
    CHECK(std::fabs(pr[0].unnormalized.mid() - (std::sqrt(2.0) - 1.0)) < 1e-12);
    CHECK(std::fabs(pr[1].unnormalized.mid() - (std::sqrt(2.0) + 1.0)) < 1e-12);
}

TEST_CASE("denominator and numerator indices") {
    FieldPtr k = gauss();
    auto [den, num] = element_ideal_indices(k->element({Rational(1, 2), Rational(1, 2)}));
    CHECK(den == 2);
    CHECK(num == 1);
    auto [d2, n2] = element_ideal_indices(k->element({Rational(1), Rational(1)}));
    CHECK(d2 == 1);
    CHECK(n2 == 2);
    auto [d3, n3] = element_ideal_indices(k->element({Rational(2, 5), Rational(1, 5)}));
    // (2 + i)/5 has norm 5/25 = 1/5
    CHECK(Rational(n3) / Rational(d3) == Rational(1, 5));
}

TEST_CASE("supplied discriminant and basis are validated") {
    CHECK_THROWS_AS(NumberField::make({Integer(1), Integer(0), Integer(1)}, Integer(4)),
                    std::invalid_argument);  // wrong sign
    FieldPtr ok = NumberField::make({Integer(1), Integer(0), Integer(1)}, Integer(-4));
    CHECK(ok->field_disc() == -4);
    CHECK(ok->disc_is_field_exact());
}
