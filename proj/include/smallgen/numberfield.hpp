#ifndef SMALLGEN_NUMBERFIELD_HPP
#define SMALLGEN_NUMBERFIELD_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "smallgen/linalg.hpp"
#include "smallgen/roots.hpp"

namespace smallgen {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a number field as a rational vector over the power basis
// 1, theta, ..., theta^{d-1}.
class FieldElement {
  public:
    FieldElement(FieldPtr field, QVec coords);

    const FieldPtr& field() const { return field_; }
    const QVec& coords() const { return coords_; }
    bool is_zero() const;
    bool operator==(const FieldElement& o) const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;

  private:
    FieldPtr field_;
    QVec coords_;
};

// Value of an element at one archimedean place, with tracked error bounds.
struct PlaceValue {
    int place;             // index: real places first, then complex representatives
    int local_degree;      // 1 at real places, 2 at complex places
    Real unnormalized;     // ||alpha||_v
    Real normalized;       // |alpha|_v = ||alpha||_v^{d_v/d}
};

class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    // Monic integer polynomial, ascending coefficients.  For degree 2 the
    // maximal order and exact field discriminant are derived; otherwise the
    // working order is Z[theta] unless a basis (rows in power coordinates,
    // first row the identity) is supplied.
    static FieldPtr make(const std::vector<Integer>& coeffs,
                         std::optional<Integer> field_disc = std::nullopt,
                         std::optional<QMat> basis = std::nullopt,
                         bool override_irreducibility = false);

    const IntPoly& defining_poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    const Integer& poly_disc() const { return poly_disc_; }
    const Integer& order_disc() const { return order_disc_; }
    const Integer& field_disc() const { return field_disc_; }
    bool disc_is_field_exact() const { return disc_exact_; }
    int real_places() const { return num_real_; }
    int complex_places() const { return num_complex_; }
    int arch_places() const { return num_real_ + num_complex_; }
    const QMat& order_basis() const { return order_basis_; }

    FieldElement element(QVec power_coords) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement theta() const;
    FieldElement from_order_coords(const QVec& v) const;
    QVec to_order_coords(const FieldElement& x) const;

    // Multiplication-by-alpha matrix on the power basis.
    QMat mult_matrix(const FieldElement& alpha) const;
    // Same map expressed on the order basis.
    QMat order_mult_matrix(const FieldElement& alpha) const;

    // Certified roots of the defining polynomial: real ascending, then one
    // representative per conjugate pair, ascending imaginary part.  Cached.
    std::vector<CertifiedRoot> embeddings(double target_radius = 1e-40) const;

    // c_k = (2/pi)^{s/d} |disc|^{1/2d}, over the discriminant the working
    // order certifies.
    Real field_constant(mpfr_prec_t prec = Real::kDefaultPrec) const;
    Real field_constant_pow_d(mpfr_prec_t prec = Real::kDefaultPrec) const;

  private:
    NumberField() = default;
    IntPoly poly_;
    Integer poly_disc_, order_disc_, field_disc_;
    bool disc_exact_ = false;
    int num_real_ = 0, num_complex_ = 0;
    QMat order_basis_, order_basis_inv_;
    mutable std::mutex cache_mutex_;
    mutable std::map<double, std::vector<CertifiedRoot>> root_cache_;
};

FieldElement elem_add(const FieldElement& x, const FieldElement& y);
FieldElement elem_mul(const FieldElement& x, const FieldElement& y);
FieldElement elem_inverse(const FieldElement& x);

// Primitive minimal polynomial over Z with positive leading coefficient.
IntPoly min_poly(const FieldElement& alpha);

// (norm, trace) of the multiplication map on the power basis.
std::pair<Rational, Rational> norm_trace(const FieldElement& alpha);

// One PlaceValue per archimedean place.
std::vector<PlaceValue> embed(const FieldElement& alpha,
                              mpfr_prec_t prec = Real::kDefaultPrec);

// ([order : denominator ideal], [order : numerator ideal]) for alpha != 0,
// both relative to the working order; |N(alpha)| = num / den.
std::pair<Integer, Integer> element_ideal_indices(const FieldElement& alpha);

// Evaluate rational coefficients at an interval point (Horner).
Real eval_qpoly(const QVec& coeffs, const Real& x);
Complex eval_qpoly(const QVec& coeffs, const Complex& z);

}  // namespace smallgen

#endif
