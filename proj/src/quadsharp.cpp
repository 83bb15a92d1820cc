#include "smallgen/quadsharp.hpp"

#include <algorithm>

namespace smallgen {

namespace {

void validate(const QuadPoly& q) {
    if (q.a < 1 || q.c < 1) throw std::invalid_argument("leading and constant terms must be >= 1");
    if (q.e == 0) throw std::invalid_argument("e must be nonzero");
    if (q.d > -1) throw std::invalid_argument("radicand must be negative");
    if (squarefree_part(q.d) != q.d) throw std::invalid_argument("radicand must be squarefree");
    if (q.b * q.b - 4 * q.a * q.c != q.d * q.e * q.e)
        throw std::invalid_argument("discriminant relation violated");
    Integer g = gcd(gcd(q.a, q.b), q.c);
    if (g != 1) throw std::invalid_argument("coefficients must be coprime");
}

}  // namespace

Integer quad_root_height(const QuadPoly& q) {
    validate(q);
    return std::max(q.a, q.c);
}

std::vector<QuadPoly> enumerate_quad_generators(const Integer& d, const Integer& B) {
    if (d > -1 || squarefree_part(d) != d)
        throw std::invalid_argument("radicand must be negative and squarefree");
    if (B < 1) throw std::invalid_argument("height bound must be >= 1");
    Integer ad = -d;
    std::vector<QuadPoly> out;
    for (Integer a = 1; a <= B; ++a) {
        for (Integer c = 1; c <= B; ++c) {
            Integer four_ac = 4 * a * c;
            for (Integer e = 1; e * e * ad <= four_ac; ++e) {
                Integer b2 = four_ac - e * e * ad;
                if (!is_perfect_square(b2)) continue;
                Integer b = isqrt(b2);
                for (int sgn = -1; sgn <= 1; sgn += 2) {
                    if (b == 0 && sgn == 1) continue;
                    Integer bs = sgn * b;
                    if (gcd(gcd(a, bs), c) != 1) continue;
                    out.push_back({a, bs, c, e, d});
                }
            }
        }
    }
    return out;
}

std::pair<Integer, QuadPoly> minimal_quad_generator_height(const Integer& d) {
    for (Integer B = 1;; ++B) {
        auto gens = enumerate_quad_generators(d, B);
        if (gens.empty()) continue;
        const QuadPoly* best = nullptr;
        Integer best_h;
        for (const auto& q : gens) {
            Integer h = std::max(q.a, q.c);
            if (!best || h < best_h) {
                best = &q;
                best_h = h;
            }
        }
        return {best_h, *best};
    }
}

SharpnessReport sharpness_check(const Integer& d, const Integer& prime_bound) {
    if (d > -1 || squarefree_part(d) != d)
        throw std::invalid_argument("radicand must be negative and squarefree");
    FieldPtr k = NumberField::make({-d, Integer(0), Integer(1)});
    PrimeSet ps = find_prime_set(k, prime_bound);
    auto [min_sq, witness] = minimal_quad_generator_height(d);
    SharpnessReport rep{ps, ps.product, min_sq, witness, ps.product == min_sq};
    return rep;
}

}  // namespace smallgen
