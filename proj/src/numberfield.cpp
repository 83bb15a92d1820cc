#include "smallgen/numberfield.hpp"

#include <algorithm>
#include <cmath>

namespace smallgen {

FieldElement::FieldElement(FieldPtr field, QVec coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != field_->degree())
        throw std::invalid_argument("coordinate vector length must equal the field degree");
    for (auto& c : coords_) c.canonicalize();
}

bool FieldElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return field_ == o.field_ && coords_ == o.coords_;
}

namespace {

void check_same_field(const FieldElement& x, const FieldElement& y) {
    if (x.field() != y.field())
        throw std::invalid_argument("elements belong to different fields");
}

// Reduce a rational polynomial (ascending) modulo the monic defining poly.
QVec reduce_mod_poly(QVec v, const IntPoly& f) {
    int d = f.degree();
    for (int i = static_cast<int>(v.size()) - 1; i >= d; --i) {
        Rational c = v[static_cast<size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j < d; ++j)
            v[static_cast<size_t>(i - d + j)] -= c * Rational(f[j]);
        v[static_cast<size_t>(i)] = 0;
    }
    v.resize(static_cast<size_t>(d));
    return v;
}

}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_field(*this, o);
    QVec r = coords_;
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.coords_[i];
    return {field_, std::move(r)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_field(*this, o);
    QVec r = coords_;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= o.coords_[i];
    return {field_, std::move(r)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_field(*this, o);
    size_t d = coords_.size();
    QVec prod(2 * d - 1, 0);
    for (size_t i = 0; i < d; ++i) {
        if (coords_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) prod[i + j] += coords_[i] * o.coords_[j];
    }
    return {field_, reduce_mod_poly(std::move(prod), field_->defining_poly())};
}

FieldElement elem_add(const FieldElement& x, const FieldElement& y) { return x + y; }
FieldElement elem_mul(const FieldElement& x, const FieldElement& y) { return x * y; }

namespace {

struct QPolyPair {
    QVec quot, rem;
};

void qp_trim(QVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

QPolyPair qp_divmod(QVec a, const QVec& b) {
    qp_trim(a);
    QVec q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        Rational qc = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = qc;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= qc * b[i];
        a.pop_back();
        qp_trim(a);
    }
    return {std::move(q), std::move(a)};
}

QVec qp_mul(const QVec& a, const QVec& b) {
    if (a.empty() || b.empty()) return {};
    QVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

QVec qp_sub(QVec a, const QVec& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

}  // namespace

FieldElement elem_inverse(const FieldElement& x) {
    if (x.is_zero()) throw std::invalid_argument("inversion of zero");
    // extended euclid in Q[x] against the defining polynomial:
    // maintain t with t * x = b (mod f); gcd is a nonzero constant.
    const IntPoly& f = x.field()->defining_poly();
    QVec a;
    for (const auto& c : f.coeffs()) a.emplace_back(c);
    QVec b = x.coords();
    qp_trim(b);
    QVec ta, tb{Rational(1)};
    while (!b.empty()) {
        auto [q, r] = qp_divmod(a, b);
        QVec tr = qp_sub(ta, qp_mul(q, tb));
        a = std::move(b);
        b = std::move(r);
        ta = std::move(tb);
        tb = std::move(tr);
    }
    if (a.size() != 1)
        throw std::logic_error("element not coprime to the defining polynomial");
    QVec inv = ta;
    for (auto& c : inv) c /= a[0];
    inv.resize(static_cast<size_t>(x.field()->degree()), 0);
    return {x.field(), reduce_mod_poly(std::move(inv), f)};
}

// ---------------------------------------------------------------------------

FieldPtr NumberField::make(const std::vector<Integer>& coeffs,
                           std::optional<Integer> field_disc,
                           std::optional<QMat> basis,
                           bool override_irreducibility) {
    IntPoly f{std::vector<Integer>(coeffs)};
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("defining polynomial must have degree >= 1");
    if (!f.is_monic()) throw std::invalid_argument("defining polynomial must be monic");
    if (d >= 2) {
        auto irr = irreducibility_check(f);
        if (irr.status == IrredStatus::proved_reducible)
            throw std::invalid_argument("defining polynomial is reducible: factor " +
                                        irr.witness_factor->str());
        if (irr.status == IrredStatus::unknown && !override_irreducibility)
            throw UnverifiedIrreducibility(
                "irreducibility unknown; pass the override flag to proceed");
    }

    auto k = std::shared_ptr<NumberField>(new NumberField());
    k->poly_ = f;
    k->poly_disc_ = d >= 2 ? poly_discriminant(f) : Integer(1);
    k->num_real_ = d >= 2 ? real_root_count(f) : 1;
    k->num_complex_ = (d - k->num_real_) / 2;

    if (basis) {
        k->order_basis_ = *basis;
        if (static_cast<int>(basis->size()) != d)
            throw std::invalid_argument("order basis must be d x d");
        QVec e0(static_cast<size_t>(d), 0);
        e0[0] = 1;
        if ((*basis)[0] != e0)
            throw std::invalid_argument("order basis must contain the identity row first");
    } else if (d == 2) {
        // maximal order of a quadratic field from the squarefree kernel
        Integer m = squarefree_part(k->poly_disc_);
        Integer dk = (m - 1) % 4 == 0 ? m : 4 * m;
        Integer e2 = k->poly_disc_ / dk;
        Integer e = isqrt(abs(e2));
        if (e * e != e2) throw std::logic_error("discriminant ratio not a square");
        // second basis row (t + theta)/e integral: e | 2t - b and e^2 | t^2 - b t + c
        const Integer& b = f[1];
        const Integer& c = f[0];
        Integer t = 0;
        bool found = false;
        for (Integer cand = 0; cand < 2 * e && !found; ++cand) {
            if ((2 * cand - b) % e == 0 && (cand * cand - b * cand + c) % (e * e) == 0) {
                t = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no integral quadratic order generator found");
        QMat ob = qmat_identity(2);
        ob[1][0] = Rational(t, e);
        ob[1][1] = Rational(1, e);
        ob[1][0].canonicalize();
        ob[1][1].canonicalize();
        k->order_basis_ = ob;
    } else {
        k->order_basis_ = qmat_identity(d);
    }
    k->order_basis_inv_ = qmat_inverse(k->order_basis_);

    Rational det = qmat_det(k->order_basis_);
    Rational od = Rational(k->poly_disc_) * det * det;
    od.canonicalize();
    if (od.get_den() != 1) throw std::invalid_argument("order basis yields non-integral discriminant");
    k->order_disc_ = od.get_num();

    if (field_disc) {
        if (*field_disc == 0 || sgn(*field_disc) != sgn(k->order_disc_))
            throw std::invalid_argument("supplied discriminant has wrong sign");
        Rational ratio = Rational(k->order_disc_) / Rational(*field_disc);
        ratio.canonicalize();
        if (ratio.get_den() != 1 || !is_perfect_square(ratio.get_num()))
            throw std::invalid_argument("supplied discriminant inconsistent: ratio not a square");
        k->field_disc_ = *field_disc;
        k->disc_exact_ = true;
    } else if (d == 2 && !basis) {
        Integer m = squarefree_part(k->poly_disc_);
        k->field_disc_ = (m - 1) % 4 == 0 ? m : 4 * m;
        k->disc_exact_ = true;
    } else if (d == 1) {
        k->field_disc_ = 1;
        k->disc_exact_ = true;
    } else {
        k->field_disc_ = k->order_disc_;
        k->disc_exact_ = false;
    }
    return k;
}

FieldElement NumberField::element(QVec power_coords) const {
    return {shared_from_this(), std::move(power_coords)};
}

FieldElement NumberField::zero() const {
    return element(QVec(static_cast<size_t>(degree()), 0));
}

FieldElement NumberField::one() const {
    QVec v(static_cast<size_t>(degree()), 0);
    v[0] = 1;
    return element(std::move(v));
}

FieldElement NumberField::theta() const {
    QVec v(static_cast<size_t>(degree()), 0);
    if (degree() < 2) throw std::invalid_argument("theta requires degree >= 2");
    v[1] = 1;
    return element(std::move(v));
}

FieldElement NumberField::from_order_coords(const QVec& v) const {
    return element(qvec_mat(v, order_basis_));
}

QVec NumberField::to_order_coords(const FieldElement& x) const {
    return qvec_mat(x.coords(), order_basis_inv_);
}

QMat NumberField::mult_matrix(const FieldElement& alpha) const {
    int d = degree();
    QMat m(static_cast<size_t>(d));
    // row i = coords of alpha * theta^i
    for (int i = 0; i < d; ++i) {
        QVec shifted(static_cast<size_t>(d + i), 0);
        for (int j = 0; j < d; ++j) shifted[static_cast<size_t>(i + j)] = alpha.coords()[static_cast<size_t>(j)];
        m[static_cast<size_t>(i)] = reduce_mod_poly(std::move(shifted), poly_);
    }
    return m;
}

QMat NumberField::order_mult_matrix(const FieldElement& alpha) const {
    return qmat_mul(order_basis_, qmat_mul(mult_matrix(alpha), order_basis_inv_));
}

std::vector<CertifiedRoot> NumberField::embeddings(double target_radius) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        for (auto& [rad, roots] : root_cache_)
            if (rad <= target_radius) return roots;
    }
    auto all = certified_roots(poly_, target_radius);
    // keep real roots (ascending already) and positive-imaginary representatives
    std::vector<CertifiedRoot> reps;
    for (auto& r : all)
        if (r.is_real || r.im.mid() > 0) reps.push_back(r);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    root_cache_[target_radius] = reps;
    return reps;
}

Real NumberField::field_constant_pow_d(mpfr_prec_t prec) const {
    Real two(2L, prec);
    Real pi = Real::pi(prec);
    Real factor = (two / pi).pow_ui(static_cast<unsigned long>(num_complex_));
    Real disc_abs(Integer(abs(field_disc_)), prec);
    return factor * disc_abs.sqrt();
}

Real NumberField::field_constant(mpfr_prec_t prec) const {
    return field_constant_pow_d(prec).rootn(static_cast<unsigned long>(degree()));
}

// ---------------------------------------------------------------------------

IntPoly min_poly(const FieldElement& alpha) {
    int d = alpha.field()->degree();
    // power stack: rows are coords of alpha^j
    QMat rows;
    FieldElement pw = alpha.field()->one();
    rows.push_back(pw.coords());
    for (int j = 1; j <= d; ++j) {
        pw = pw * alpha;
        // try to express pw as a combination of earlier rows
        // solve y * M = pw with M the j x d matrix of previous rows
        size_t m = rows.size();
        // find y with y * rows = pw, i.e. solve rows^T y = pw^T
        QVec rhs = pw.coords();               // length d
        QMat work = qmat_transpose(rows);     // d x m
        std::vector<Rational> sol(m, 0);
        // row echelon on work (d x m), tracking rhs
        size_t prow = 0;
        std::vector<size_t> pivots;
        for (size_t col = 0; col < m && prow < work.size(); ++col) {
            size_t sel = SIZE_MAX;
            for (size_t r = prow; r < work.size(); ++r)
                if (work[r][col] != 0) {
                    sel = r;
                    break;
                }
            if (sel == SIZE_MAX) continue;
            std::swap(work[sel], work[prow]);
            std::swap(rhs[sel], rhs[prow]);
            Rational inv = 1 / work[prow][col];
            for (size_t j2 = 0; j2 < m; ++j2) work[prow][j2] *= inv;
            rhs[prow] *= inv;
            for (size_t r = 0; r < work.size(); ++r) {
                if (r == prow || work[r][col] == 0) continue;
                Rational fct = work[r][col];
                for (size_t j2 = 0; j2 < m; ++j2) work[r][j2] -= fct * work[prow][j2];
                rhs[r] -= fct * rhs[prow];
            }
            pivots.push_back(col);
            ++prow;
        }
        bool consistent = true;
        for (size_t r = prow; r < work.size(); ++r)
            if (rhs[r] != 0) consistent = false;
        if (consistent) {
            for (size_t i = 0; i < pivots.size(); ++i) sol[pivots[i]] = rhs[i];
            // min poly: x^j - sum sol_i x^i
            std::vector<Integer> num(static_cast<size_t>(j) + 1);
            Integer den = 1;
            for (const auto& s : sol) den = lcm(den, s.get_den());
            for (size_t i = 0; i < sol.size(); ++i) {
                Rational scaled = -sol[i] * Rational(den);
                num[i] = scaled.get_num();
            }
            num[static_cast<size_t>(j)] = den;
            return IntPoly(std::move(num)).primitive_part();
        }
        rows.push_back(pw.coords());
    }
    throw std::logic_error("minimal polynomial search failed");
}

std::pair<Rational, Rational> norm_trace(const FieldElement& alpha) {
    QMat m = alpha.field()->mult_matrix(alpha);
    Rational det = qmat_det(m);
    Rational tr = 0;
    for (size_t i = 0; i < m.size(); ++i) tr += m[i][i];
    det.canonicalize();
    tr.canonicalize();
    return {det, tr};
}

Real eval_qpoly(const QVec& coeffs, const Real& x) {
    Real acc(0L, x.prec());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + Real(*it, x.prec());
    return acc;
}

Complex eval_qpoly(const QVec& coeffs, const Complex& z) {
    mpfr_prec_t prec = z.re.prec();
    Complex acc(prec);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * z;
        acc.re = acc.re + Real(*it, prec);
    }
    return acc;
}

std::vector<PlaceValue> embed(const FieldElement& alpha, mpfr_prec_t prec) {
    const auto& k = *alpha.field();
    double target = std::pow(2.0, -std::min<double>(static_cast<double>(prec) / 2 + 30, 900));
    auto roots = k.embeddings(target);
    unsigned long d = static_cast<unsigned long>(k.degree());
    std::vector<PlaceValue> out;
    int idx = 0;
    for (const auto& r : roots) {
        Complex x = r.enclosure();
        PlaceValue pv{idx, r.is_real ? 1 : 2, Real(prec), Real(prec)};
        if (r.is_real) {
            Real v = eval_qpoly(alpha.coords(), x.re);
            pv.unnormalized = v.abs();
        } else {
            pv.unnormalized = eval_qpoly(alpha.coords(), x).abs();
        }
        pv.normalized = pv.unnormalized.pow_ui(static_cast<unsigned long>(pv.local_degree)).rootn(d);
        out.push_back(std::move(pv));
        ++idx;
    }
    return out;
}

std::pair<Integer, Integer> element_ideal_indices(const FieldElement& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("ideal indices of zero");
    const auto& k = *alpha.field();
    QMat c = k.order_mult_matrix(alpha);
    // denominator lattice: Z^d intersected with the row span of C^{-1}
    QMat den_basis = lattice_intersect(qmat_identity(k.degree()), qmat_inverse(c));
    Rational den_cov = lattice_covolume(den_basis);
    den_cov.canonicalize();
    if (den_cov.get_den() != 1) throw std::logic_error("denominator index not integral");
    QMat num_basis = qmat_mul(den_basis, c);
    Rational num_cov = lattice_covolume(num_basis);
    num_cov.canonicalize();
    if (num_cov.get_den() != 1) throw std::logic_error("numerator index not integral");
    return {den_cov.get_num(), num_cov.get_num()};
}

}  // namespace smallgen
