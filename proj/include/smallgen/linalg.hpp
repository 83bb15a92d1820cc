#ifndef SMALLGEN_LINALG_HPP
#define SMALLGEN_LINALG_HPP

#include <optional>
#include <vector>

#include "smallgen/numeric.hpp"

namespace smallgen {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;   // row major
using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;

QMat qmat_identity(int n);
QMat qmat_mul(const QMat& a, const QMat& b);
QVec qvec_mat(const QVec& v, const QMat& m);  // row vector times matrix
Rational qmat_det(QMat a);
QMat qmat_inverse(const QMat& a);             // throws on singular input
QMat qmat_transpose(const QMat& a);
QMat qmat_scaled(const QMat& a, const Rational& k);

// Hermite normal form of the lattice generated by the rows (m x n, rank n):
// n x n, upper triangular, positive diagonal, entries above each pivot
// reduced into [0, pivot).  Canonical, so lattice equality is matrix equality.
ZMat hnf(ZMat rows);

// HNF basis for a rational lattice given by generating rows.
QMat hnf_q(const QMat& rows);

// |det| of a square rational matrix basis.
Rational lattice_covolume(const QMat& basis);

// Does v lie in the lattice spanned by the rows of basis (any full-rank basis)?
bool lattice_contains(const QMat& basis, const QVec& v);

// Coordinates of v in the given row basis.
QVec solve_row(const QMat& basis, const QVec& v);

// Basis of the intersection of two full-rank rational lattices (via duals).
QMat lattice_intersect(const QMat& a, const QMat& b);

}  // namespace smallgen

#endif
