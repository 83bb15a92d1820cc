#ifndef SMALLGEN_ADELIC_HPP
#define SMALLGEN_ADELIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "smallgen/heights.hpp"
#include "smallgen/numberfield.hpp"
#include "smallgen/splitting.hpp"

namespace smallgen {

// Full-rank fractional-ideal lattice over the working order.  The canonical
// basis is kept in order coordinates (HNF, so equal lattices compare equal);
// norm = covolume relative to the order, norm(order) = 1, norm(prime) = p.
struct IdealLattice {
    FieldPtr field;
    QMat basis_order;  // d x d HNF rows, coordinates over the order basis
    Rational norm;

    QMat basis_power() const;  // rows in power-basis coordinates
    FieldElement element(size_t row) const;
    bool operator==(const IdealLattice& o) const {
        return basis_order == o.basis_order && norm == o.norm;
    }
};

IdealLattice order_ideal(const FieldPtr& k);

// p*O + (eta - root)*O where eta is the second order-basis element for
// quadratic fields and theta otherwise; requires root to designate a
// degree-one place (norm comes out p, which is checked).
IdealLattice prime_ideal(const FieldPtr& k, const Integer& p, const Integer& root);

// Inverse of a prime ideal (or the order itself) as a fractional ideal,
// via the mod-p colon kernel; the product with the input is re-checked
// to be the order.
IdealLattice ideal_inverse(const IdealLattice& I);

// HNF closure of pairwise basis products; norms multiply.
IdealLattice ideal_product(const IdealLattice& I, const IdealLattice& J);

// Rows = archimedean embeddings of the basis (real place: one coordinate,
// complex place: Re and Im); covolume = |det| = 2^{-s} |disc|^{1/2} norm.
struct MinkowskiLattice {
    std::vector<std::vector<Real>> rows;
    Real covolume;
};

MinkowskiLattice minkowski_lattice(const IdealLattice& I, mpfr_prec_t prec = 256);

// Haar measure 2^d c_k^{-d} (prod of normalized archimedean radii)^d / ideal_norm.
Real box_measure(const FieldPtr& k, const std::vector<Real>& gamma_abs,
                 const Rational& ideal_norm, mpfr_prec_t prec = 256);

// Strict Minkowski condition c_k < prod |gamma_v|_v, i.e. measure > 2^d.
bool minkowski_guarantee(const FieldPtr& k, const std::vector<Real>& gamma_abs,
                         const Rational& ideal_norm);

// Open-ball radius at one archimedean place, in the unnormalized absolute
// value (|.| for real, modulus for complex).  When the radius is an exact
// rational, boundary points are resolved exactly instead of by precision
// escalation.
struct PlaceRadius {
    Real value;
    std::optional<Rational> exact;

    static PlaceRadius one();
    static PlaceRadius rational(const Rational& r);
    static PlaceRadius real(Real v) { return {std::move(v), std::nullopt}; }
};

// All nonzero lattice points strictly inside the archimedean box, sorted by
// height then lexicographic power coordinates.  Throws CapExceededError past
// the candidate cap.
std::vector<FieldElement> enumerate_box(const IdealLattice& I,
                                        const std::vector<PlaceRadius>& radii,
                                        long cap = 1000000);

enum class TheoremTag { real_place, padic };

struct PlaceCheck {
    std::string what;
    bool pass;
};

struct GeneratorCertificate {
    FieldElement alpha;
    IntPoly minimal_poly;
    HeightValue height;
    Real bound;
    TheoremTag tag;
    int real_place = -1;              // real_place route
    std::vector<Integer> primes;      // padic route
    std::vector<Integer> roots;       //   designated roots, parallel to primes
    long equality_places = 0;         //   places where |alpha|_w attains the cap
    std::vector<PlaceCheck> place_record;
};

// Search the order box with radius (c(1+eps))^d at real place w and 1 at the
// other archimedean places; returns a minimal-height degree-d point with
// H <= c(1+eps).
GeneratorCertificate find_generator_real(const FieldPtr& k, int w, double eps,
                                         long cap = 1000000);

// Search the box over the product of inverse prime ideals of P with all
// archimedean radii 1; the certificate pins the denominator ideal to the
// designated primes and H <= (prod p)^{1/d}.
GeneratorCertificate find_generator_padic(const FieldPtr& k, const PrimeSet& P,
                                          long cap = 1000000);

// Recompute every recorded check from scratch.
bool verify_certificate(const GeneratorCertificate& cert);

}  // namespace smallgen

#endif
