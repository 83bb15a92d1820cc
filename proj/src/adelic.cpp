#include "smallgen/adelic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace smallgen {

QMat IdealLattice::basis_power() const {
    return qmat_mul(basis_order, field->order_basis());
}

FieldElement IdealLattice::element(size_t row) const {
    return field->from_order_coords(basis_order[row]);
}

IdealLattice order_ideal(const FieldPtr& k) {
    return {k, qmat_identity(k->degree()), Rational(1)};
}

IdealLattice prime_ideal(const FieldPtr& k, const Integer& p, const Integer& root) {
    int d = k->degree();
    FieldElement eta = (d == 2) ? k->from_order_coords({Rational(0), Rational(1)})
                                : k->theta();
    IntPoly m = min_poly(eta);
    if (m.eval(root) % p != 0)
        throw std::invalid_argument("designated residue is not a root mod p");
    QVec gc = eta.coords();
    gc[0] -= Rational(root);
    FieldElement gen = k->element(std::move(gc));

    QMat rows;
    for (int i = 0; i < d; ++i) {
        QVec r(static_cast<size_t>(d), Rational(0));
        r[static_cast<size_t>(i)] = Rational(p);
        rows.push_back(std::move(r));
    }
    QMat mg = k->order_mult_matrix(gen);
    rows.insert(rows.end(), mg.begin(), mg.end());
    QMat h = hnf_q(rows);
    Rational nrm = lattice_covolume(h);
    nrm.canonicalize();
    if (nrm != Rational(p))
        throw std::invalid_argument("designated root does not give a degree-one place");
    return {k, std::move(h), nrm};
}

namespace {

// Kernel of x -> (sum_j x_j * eq[j]) mod p over all equations, as vectors
// with entries in [0, p).
std::vector<std::vector<Integer>> fp_kernel(std::vector<std::vector<Integer>> eqs,
                                            int n, const Integer& p) {
    auto inv_mod = [&](const Integer& a) {
        Integer r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::logic_error("noninvertible pivot");
        return r;
    };
    std::vector<int> pivot_col;
    size_t row = 0;
    for (int col = 0; col < n && row < eqs.size(); ++col) {
        size_t pr = row;
        while (pr < eqs.size() && eqs[pr][static_cast<size_t>(col)] % p == 0) ++pr;
        if (pr == eqs.size()) continue;
        std::swap(eqs[row], eqs[pr]);
        Integer inv = inv_mod(eqs[row][static_cast<size_t>(col)]);
        for (int j = 0; j < n; ++j) {
            eqs[row][static_cast<size_t>(j)] = eqs[row][static_cast<size_t>(j)] * inv % p;
            if (eqs[row][static_cast<size_t>(j)] < 0) eqs[row][static_cast<size_t>(j)] += p;
        }
        for (size_t i = 0; i < eqs.size(); ++i) {
            if (i == row) continue;
            Integer f = eqs[i][static_cast<size_t>(col)] % p;
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                eqs[i][static_cast<size_t>(j)] =
                    (eqs[i][static_cast<size_t>(j)] - f * eqs[row][static_cast<size_t>(j)]) % p;
                if (eqs[i][static_cast<size_t>(j)] < 0) eqs[i][static_cast<size_t>(j)] += p;
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<std::vector<Integer>> kernel;
    for (int col = 0; col < n; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        std::vector<Integer> v(static_cast<size_t>(n), Integer(0));
        v[static_cast<size_t>(col)] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r) {
            Integer val = (p - eqs[r][static_cast<size_t>(col)] % p) % p;
            v[static_cast<size_t>(pivot_col[r])] = val;
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace

IdealLattice ideal_inverse(const IdealLattice& I) {
    const FieldPtr& k = I.field;
    int d = k->degree();
    if (I.norm == 1 && I.basis_order == qmat_identity(d)) return I;
    Rational nr = I.norm;
    nr.canonicalize();
    if (nr.get_den() != 1 || !is_prime(nr.get_num()))
        throw std::invalid_argument("ideal_inverse expects a prime ideal or the order");
    Integer p = nr.get_num();

    // x * g in p*O for every basis generator g of I
    std::vector<std::vector<Integer>> eqs;
    for (int t = 0; t < d; ++t) {
        QMat M = k->order_mult_matrix(I.element(static_cast<size_t>(t)));
        for (int c = 0; c < d; ++c) {
            std::vector<Integer> eq(static_cast<size_t>(d));
            for (int j = 0; j < d; ++j) {
                Rational q = M[static_cast<size_t>(j)][static_cast<size_t>(c)];
                q.canonicalize();
                if (q.get_den() != 1) throw std::logic_error("nonintegral ideal multiplier");
                Integer e = q.get_num() % p;
                if (e < 0) e += p;
                eq[static_cast<size_t>(j)] = e;
            }
            eqs.push_back(std::move(eq));
        }
    }
    auto kernel = fp_kernel(std::move(eqs), d, p);

    QMat rows;
    for (int i = 0; i < d; ++i) {
        QVec r(static_cast<size_t>(d), Rational(0));
        r[static_cast<size_t>(i)] = Rational(p);
        rows.push_back(std::move(r));
    }
    for (const auto& v : kernel) {
        QVec r(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) r[static_cast<size_t>(j)] = Rational(v[static_cast<size_t>(j)]);
        rows.push_back(std::move(r));
    }
    Rational inv_p(Integer(1), p);
    QMat h = qmat_scaled(hnf_q(rows), inv_p);
    Rational nrm = lattice_covolume(h);
    nrm.canonicalize();
    IdealLattice J{k, std::move(h), nrm};
    if (!(ideal_product(I, J) == order_ideal(k)))
        throw std::logic_error("ideal inverse failed verification");
    return J;
}

IdealLattice ideal_product(const IdealLattice& I, const IdealLattice& J) {
    if (I.field != J.field) throw std::invalid_argument("ideal product across fields");
    const FieldPtr& k = I.field;
    int d = k->degree();
    QMat rows;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            rows.push_back(k->to_order_coords(I.element(static_cast<size_t>(i)) *
                                              J.element(static_cast<size_t>(j))));
    QMat h = hnf_q(rows);
    Rational nrm = lattice_covolume(h);
    nrm.canonicalize();
    Rational expect = I.norm * J.norm;
    expect.canonicalize();
    if (nrm != expect) throw std::logic_error("ideal product norm mismatch");
    return {k, std::move(h), nrm};
}

namespace {

Real laplace_det(const std::vector<std::vector<Real>>& m, mpfr_prec_t prec) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Real acc(0L, prec);
    for (size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Real>> minor;
        for (size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<Real> row;
            for (size_t c = 1; c < n; ++c) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Real term = m[i][0] * laplace_det(minor, prec);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

MinkowskiLattice minkowski_lattice(const IdealLattice& I, mpfr_prec_t prec) {
    const FieldPtr& k = I.field;
    double target = std::pow(2.0, -std::min<double>(static_cast<double>(prec) / 2 + 30, 900));
    auto roots = k->embeddings(target);
    QMat bp = I.basis_power();
    std::vector<std::vector<Real>> rows;
    for (const auto& v : bp) {
        std::vector<Real> row;
        for (const auto& r : roots) {
            if (r.is_real) {
                row.push_back(eval_qpoly(v, r.enclosure().re));
            } else {
                Complex z = eval_qpoly(v, r.enclosure());
                row.push_back(z.re);
                row.push_back(z.im);
            }
        }
        rows.push_back(std::move(row));
    }
    Real det = laplace_det(rows, prec).abs();
    return {std::move(rows), std::move(det)};
}

Real box_measure(const FieldPtr& k, const std::vector<Real>& gamma_abs,
                 const Rational& ideal_norm, mpfr_prec_t prec) {
    if (static_cast<int>(gamma_abs.size()) != k->arch_places())
        throw std::invalid_argument("one radius per archimedean place expected");
    unsigned long d = static_cast<unsigned long>(k->degree());
    Real prod(1L, prec);
    for (const auto& g : gamma_abs) prod = prod * g;
    Real two_d(Integer(Integer(1) << d), prec);
    return two_d / k->field_constant_pow_d(prec) * prod.pow_ui(d) / Real(ideal_norm, prec);
}

bool minkowski_guarantee(const FieldPtr& k, const std::vector<Real>& gamma_abs,
                         const Rational& ideal_norm) {
    for (mpfr_prec_t prec = 256;; prec *= 2) {
        Real m = box_measure(k, gamma_abs, ideal_norm, prec);
        Real two_d(Integer(Integer(1) << k->degree()), prec);
        if (m.surely_gt(two_d)) return true;
        if (m.surely_lt(two_d)) return false;
        if (prec >= Real::kMaxPrec)
            throw PrecisionError("volume threshold comparison inconclusive");
    }
}

PlaceRadius PlaceRadius::one() { return rational(Rational(1)); }

PlaceRadius PlaceRadius::rational(const Rational& r) {
    return {Real(r, 256), r};
}

namespace {

// Exactly computable squared absolute value at a place, when available.
std::optional<Rational> exact_abs_square(const FieldElement& a, int local_degree) {
    bool is_rational = true;
    for (size_t j = 1; j < a.coords().size(); ++j)
        if (a.coords()[j] != 0) is_rational = false;
    if (is_rational) {
        Rational q = a.coords()[0];
        return q * q;
    }
    if (a.field()->degree() == 2 && local_degree == 2) {
        Rational n = norm_trace(a).first;  // conjugate pair: modulus^2 = |N(a)|
        return abs(n);
    }
    return std::nullopt;
}

// -1: strictly inside the radius, +1: outside (or on the boundary), 0: exactly
// on the boundary.  Conclusive or throws.
int compare_place_value(const FieldElement& a, size_t place, const PlaceRadius& r) {
    for (mpfr_prec_t prec = 128;; prec *= 2) {
        auto places = embed(a, prec);
        const Real& u = places[place].unnormalized;
        if (u.surely_lt(r.value)) return -1;
        if (r.value.surely_lt(u)) return 1;
        if (r.exact) {
            auto u2 = exact_abs_square(a, places[place].local_degree);
            if (u2) {
                Rational r2 = *r.exact * *r.exact;
                return *u2 < r2 ? -1 : (*u2 == r2 ? 0 : 1);
            }
        }
        if (prec >= Real::kMaxPrec)
            throw PrecisionError("box boundary comparison inconclusive");
    }
}

bool inside_box(const FieldElement& a, const std::vector<PlaceRadius>& radii) {
    for (size_t v = 0; v < radii.size(); ++v)
        if (compare_place_value(a, v, radii[v]) >= 0) return false;
    return true;
}

struct SortKey {
    double approx;
    std::optional<Integer> exact2;
    QVec coords;
};

bool key_less(const SortKey& a, const SortKey& b) {
    if (a.approx != b.approx) return a.approx < b.approx;
    if (a.exact2 && b.exact2 && *a.exact2 != *b.exact2) return *a.exact2 < *b.exact2;
    return a.coords < b.coords;
}

SortKey height_key(const FieldElement& a) {
    IntPoly m = min_poly(a);
    SortKey key{0.0, exact_height_square(m), a.coords()};
    if (key.exact2) {
        key.approx = std::sqrt(key.exact2->get_d());
    } else if (m.degree() == 2) {
        // one root inside the unit circle: M = (|b| + sqrt(disc)) / 2
        double disc = m[1].get_d() * m[1].get_d() - 4.0 * m[2].get_d() * m[0].get_d();
        double mm = 0.5 * (std::fabs(m[1].get_d()) + std::sqrt(disc));
        key.approx = std::sqrt(mm);
    } else {
        key.approx = std::pow(mahler_measure(m, 128).mid(),
                              1.0 / static_cast<double>(m.degree()));
    }
    return key;
}

}  // namespace

std::vector<FieldElement> enumerate_box(const IdealLattice& I,
                                        const std::vector<PlaceRadius>& radii,
                                        long cap) {
    const FieldPtr& k = I.field;
    int d = k->degree();
    if (static_cast<int>(radii.size()) != k->arch_places())
        throw std::invalid_argument("one radius per archimedean place expected");
    auto roots = k->embeddings(1e-30);
    QMat bp = I.basis_power();

    // approximate embedding matrix, row i = embedding of basis element i
    std::vector<std::vector<double>> E(static_cast<size_t>(d),
                                       std::vector<double>(static_cast<size_t>(d)));
    std::vector<double> ybound;
    for (int i = 0; i < d; ++i) {
        size_t c = 0;
        for (size_t v = 0; v < roots.size(); ++v) {
            Complex z = eval_qpoly(bp[static_cast<size_t>(i)], roots[v].enclosure());
            E[static_cast<size_t>(i)][c++] = z.re.mid();
            if (!roots[v].is_real) E[static_cast<size_t>(i)][c++] = z.im.mid();
        }
    }
    for (size_t v = 0; v < roots.size(); ++v) {
        double r = radii[v].value.hi_d();
        ybound.push_back(r);
        if (!roots[v].is_real) ybound.push_back(r);
    }

    // invert E (Gauss-Jordan with partial pivoting)
    std::vector<std::vector<double>> inv(static_cast<size_t>(d),
                                         std::vector<double>(static_cast<size_t>(d), 0.0));
    for (int i = 0; i < d; ++i) inv[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;
    auto A = E;
    for (int col = 0; col < d; ++col) {
        int piv = col;
        for (int r = col + 1; r < d; ++r)
            if (std::fabs(A[static_cast<size_t>(r)][static_cast<size_t>(col)]) >
                std::fabs(A[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
                piv = r;
        std::swap(A[static_cast<size_t>(col)], A[static_cast<size_t>(piv)]);
        std::swap(inv[static_cast<size_t>(col)], inv[static_cast<size_t>(piv)]);
        double pv = A[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int j = 0; j < d; ++j) {
            A[static_cast<size_t>(col)][static_cast<size_t>(j)] /= pv;
            inv[static_cast<size_t>(col)][static_cast<size_t>(j)] /= pv;
        }
        for (int r = 0; r < d; ++r) {
            if (r == col) continue;
            double f = A[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0.0) continue;
            for (int j = 0; j < d; ++j) {
                A[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                    f * A[static_cast<size_t>(col)][static_cast<size_t>(j)];
                inv[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
                    f * inv[static_cast<size_t>(col)][static_cast<size_t>(j)];
            }
        }
    }

    // |x_j| <= sum_v |inv[v][j]| * ybound[v], with slack for rounding
    std::vector<long> bound(static_cast<size_t>(d));
    long long total = 1;
    for (int j = 0; j < d; ++j) {
        double s = 0.0;
        for (int v = 0; v < d; ++v)
            s += std::fabs(inv[static_cast<size_t>(v)][static_cast<size_t>(j)]) *
                 ybound[static_cast<size_t>(v)];
        bound[static_cast<size_t>(j)] = static_cast<long>(std::floor(s * (1.0 + 1e-9) + 1e-9)) + 1;
        total *= 2 * bound[static_cast<size_t>(j)] + 1;
        if (total > cap) throw CapExceededError("box enumeration exceeds the candidate cap");
    }

    std::vector<FieldElement> points;
    std::vector<long> x(static_cast<size_t>(d), 0);
    for (size_t j = 0; j < x.size(); ++j) x[j] = -bound[j];
    while (true) {
        bool zero = true;
        for (long xi : x)
            if (xi != 0) zero = false;
        if (!zero) {
            QVec coords(static_cast<size_t>(d), Rational(0));
            for (int i = 0; i < d; ++i) {
                if (x[static_cast<size_t>(i)] == 0) continue;
                for (int j = 0; j < d; ++j)
                    coords[static_cast<size_t>(j)] +=
                        Rational(x[static_cast<size_t>(i)]) * bp[static_cast<size_t>(i)][static_cast<size_t>(j)];
            }
            FieldElement a = k->element(std::move(coords));
            if (inside_box(a, radii)) points.push_back(std::move(a));
        }
        int j = 0;
        while (j < d && x[static_cast<size_t>(j)] == bound[static_cast<size_t>(j)]) {
            x[static_cast<size_t>(j)] = -bound[static_cast<size_t>(j)];
            ++j;
        }
        if (j == d) break;
        ++x[static_cast<size_t>(j)];
    }

    std::vector<SortKey> keys;
    keys.reserve(points.size());
    for (const auto& a : points) keys.push_back(height_key(a));
    std::vector<size_t> order(points.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t i, size_t j) { return key_less(keys[i], keys[j]); });
    std::vector<FieldElement> out;
    out.reserve(points.size());
    for (size_t i : order) out.push_back(std::move(points[i]));
    return out;
}

namespace {

bool height_within(const HeightValue& h, const Real& bound,
                   const std::optional<Integer>& bound_square) {
    if (h.exact_square && bound_square) return *h.exact_square <= *bound_square;
    return !bound.surely_lt(h.value);
}

}  // namespace

GeneratorCertificate find_generator_real(const FieldPtr& k, int w, double eps, long cap) {
    int d = k->degree();
    if (d < 2) throw std::invalid_argument("generator search needs degree >= 2");
    if (w < 0 || w >= k->real_places())
        throw std::invalid_argument("real place index out of range");

    Real rho = k->field_constant(256) * (Real(1L, 256) + Real::from_double(eps, 256));
    std::vector<PlaceRadius> radii;
    for (int v = 0; v < k->arch_places(); ++v) {
        if (v == w)
            radii.push_back(PlaceRadius::real(rho.pow_ui(static_cast<unsigned long>(d))));
        else
            radii.push_back(PlaceRadius::one());
    }
    auto pts = enumerate_box(order_ideal(k), radii, cap);
    if (pts.empty())
        throw std::logic_error("empty box contradicts the volume condition");

    for (const auto& a : pts) {
        IntPoly m = min_poly(a);
        if (m.degree() != d) continue;
        GeneratorCertificate cert{a, m, weil_height(a, 256), rho,
                                  TheoremTag::real_place, w, {}, {}, 0, {}};
        cert.place_record.push_back({"minimal polynomial has full degree", true});
        // a nonzero integral point cannot sit inside every unit ball: |norm| >= 1
        bool above_one = false;
        for (mpfr_prec_t prec = 128; prec <= Real::kMaxPrec; prec *= 2) {
            auto places = embed(a, prec);
            if (places[static_cast<size_t>(w)].unnormalized.surely_gt(Real(1L, prec))) {
                above_one = true;
                break;
            }
        }
        cert.place_record.push_back({"distinguished place exceeds 1", above_one});
        bool inside = compare_place_value(a, static_cast<size_t>(w), radii[static_cast<size_t>(w)]) < 0;
        cert.place_record.push_back({"distinguished place below the scaled radius", inside});
        bool others = true;
        for (int v = 0; v < k->arch_places(); ++v)
            if (v != w && compare_place_value(a, static_cast<size_t>(v), radii[static_cast<size_t>(v)]) >= 0)
                others = false;
        cert.place_record.push_back({"remaining places inside the unit ball", others});
        cert.place_record.push_back(
            {"height within bound", height_within(cert.height, cert.bound, std::nullopt)});
        return cert;
    }
    throw NotFoundError("no full-degree point in the search box");
}

namespace {

// Denominator ideal of alpha in order coordinates, canonical HNF, plus index.
std::pair<QMat, Integer> denominator_ideal(const FieldElement& a) {
    const FieldPtr& k = a.field();
    QMat c = k->order_mult_matrix(a);
    QMat den = hnf_q(lattice_intersect(qmat_identity(k->degree()), qmat_inverse(c)));
    Rational idx = lattice_covolume(den);
    idx.canonicalize();
    if (idx.get_den() != 1) throw std::logic_error("denominator index not integral");
    return {std::move(den), idx.get_num()};
}

// Checks that the denominator ideal of alpha is the product of a nonempty
// subset of the given prime ideals; returns the subset size (= number of
// places where |alpha|_w attains its cap), or nullopt on failure.
std::optional<long> denominator_matches(const FieldElement& a,
                                        const std::vector<Integer>& primes,
                                        const std::vector<IdealLattice>& prime_ideals) {
    auto [den, idx] = denominator_ideal(a);
    if (idx == 1) return std::nullopt;  // integral alpha: no cap attained
    std::vector<size_t> subset;
    Integer prod = 1;
    for (size_t i = 0; i < primes.size(); ++i) {
        if (idx % primes[i] == 0) {
            subset.push_back(i);
            prod *= primes[i];
        }
    }
    if (subset.empty() || prod != idx) return std::nullopt;
    IdealLattice expect = order_ideal(a.field());
    for (size_t i : subset) expect = ideal_product(expect, prime_ideals[i]);
    if (expect.basis_order != den) return std::nullopt;
    return static_cast<long>(subset.size());
}

}  // namespace

GeneratorCertificate find_generator_padic(const FieldPtr& k, const PrimeSet& P, long cap) {
    int d = k->degree();
    if (d < 2) throw std::invalid_argument("generator search needs degree >= 2");
    if (P.primes.empty() || P.primes.size() != P.roots.size())
        throw std::invalid_argument("invalid prime set");

    std::vector<IdealLattice> prime_ideals;
    IdealLattice box_ideal = order_ideal(k);
    Integer prod = 1;
    for (size_t i = 0; i < P.primes.size(); ++i) {
        prime_ideals.push_back(prime_ideal(k, P.primes[i], P.roots[i]));
        box_ideal = ideal_product(box_ideal, ideal_inverse(prime_ideals.back()));
        prod *= P.primes[i];
    }
    std::vector<PlaceRadius> radii(static_cast<size_t>(k->arch_places()), PlaceRadius::one());
    auto pts = enumerate_box(box_ideal, radii, cap);
    if (pts.empty())
        throw std::logic_error("empty box contradicts the volume condition");

    Real bound = Real(prod, 256).rootn(static_cast<unsigned long>(d));
    for (const auto& a : pts) {
        IntPoly m = min_poly(a);
        if (m.degree() != d) continue;
        auto eq = denominator_matches(a, P.primes, prime_ideals);
        if (!eq) continue;
        GeneratorCertificate cert{a, m, weil_height(a, 256), bound,
                                  TheoremTag::padic, -1, P.primes, P.roots, *eq, {}};
        cert.place_record.push_back({"minimal polynomial has full degree", true});
        cert.place_record.push_back({"denominator ideal matches the designated primes", true});
        cert.place_record.push_back({"cap attained at a designated place", *eq >= 1});
        bool arch = true;
        for (int v = 0; v < k->arch_places(); ++v)
            if (compare_place_value(a, static_cast<size_t>(v), radii[static_cast<size_t>(v)]) >= 0)
                arch = false;
        cert.place_record.push_back({"archimedean places inside the unit ball", arch});
        cert.place_record.push_back(
            {"height within bound", height_within(cert.height, cert.bound, prod)});
        return cert;
    }
    throw std::logic_error("no admissible point in the box");
}

bool verify_certificate(const GeneratorCertificate& cert) {
    try {
        const FieldPtr& k = cert.alpha.field();
        int d = k->degree();
        IntPoly m = min_poly(cert.alpha);
        if (m != cert.minimal_poly) return false;
        if (m.degree() != d) return false;

        HeightValue h = weil_height(cert.alpha, 256);
        Real h2 = height_embedding_route(cert.alpha, 256);
        if (h.value.surely_lt(h2) || h2.surely_lt(h.value)) return false;
        if (cert.bound.surely_lt(h.value)) return false;

        if (cert.tag == TheoremTag::real_place) {
            int w = cert.real_place;
            if (w < 0 || w >= k->real_places()) return false;
            Real radius_w = cert.bound.pow_ui(static_cast<unsigned long>(d));
            for (int v = 0; v < k->arch_places(); ++v) {
                PlaceRadius r = (v == w) ? PlaceRadius::real(radius_w) : PlaceRadius::one();
                if (compare_place_value(cert.alpha, static_cast<size_t>(v), r) >= 0) return false;
            }
            bool above_one = false;
            for (mpfr_prec_t prec = 128; prec <= Real::kMaxPrec; prec *= 2) {
                auto places = embed(cert.alpha, prec);
                if (places[static_cast<size_t>(w)].unnormalized.surely_gt(Real(1L, prec))) {
                    above_one = true;
                    break;
                }
            }
            if (!above_one) return false;
        } else {
            if (cert.primes.empty() || cert.primes.size() != cert.roots.size()) return false;
            std::vector<IdealLattice> prime_ideals;
            Integer prod = 1;
            for (size_t i = 0; i < cert.primes.size(); ++i) {
                prime_ideals.push_back(prime_ideal(k, cert.primes[i], cert.roots[i]));
                prod *= cert.primes[i];
            }
            // the recorded bound must match (prod p)^{1/d}
            Real expect = Real(prod, 256).rootn(static_cast<unsigned long>(d));
            if (expect.surely_lt(cert.bound) || cert.bound.surely_lt(expect)) return false;
            auto eq = denominator_matches(cert.alpha, cert.primes, prime_ideals);
            if (!eq || *eq != cert.equality_places || *eq < 1) return false;
            if (h.exact_square && !(*h.exact_square <= prod)) return false;
            for (int v = 0; v < k->arch_places(); ++v)
                if (compare_place_value(cert.alpha, static_cast<size_t>(v), PlaceRadius::one()) >= 0)
                    return false;
        }
        for (const auto& pc : cert.place_record)
            if (!pc.pass) return false;
        return true;
    } catch (...) {
        return false;
    }
}

}  // namespace smallgen
