#include "smallgen/linalg.hpp"

#include <algorithm>

namespace smallgen {

QMat qmat_identity(int n) {
    QMat m(static_cast<size_t>(n), QVec(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    QMat r(n, QVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

QVec qvec_mat(const QVec& v, const QMat& m) {
    QVec r(m[0].size(), 0);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < r.size(); ++j) r[j] += v[i] * m[i][j];
    }
    return r;
}

Rational qmat_det(QMat a) {
    size_t n = a.size();
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = 1 / a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] * inv;
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

QMat qmat_inverse(const QMat& a) {
    size_t n = a.size();
    QMat m = a, inv = qmat_identity(static_cast<int>(n));
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

QMat qmat_transpose(const QMat& a) {
    QMat r(a[0].size(), QVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

QMat qmat_scaled(const QMat& a, const Rational& k) {
    QMat r = a;
    for (auto& row : r)
        for (auto& x : row) x *= k;
    return r;
}

ZMat hnf(ZMat rows) {
    size_t m = rows.size();
    if (m == 0) return rows;
    size_t n = rows[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < n && pivot_row < m; ++col) {
        // gcd elimination among rows >= pivot_row in this column
        while (true) {
            size_t best = m;
            for (size_t r = pivot_row; r < m; ++r)
                if (rows[r][col] != 0 && (best == m || abs(rows[r][col]) < abs(rows[best][col])))
                    best = r;
            if (best == m) break;  // column zero below pivot
            std::swap(rows[pivot_row], rows[best]);
            bool clean = true;
            for (size_t r = pivot_row + 1; r < m; ++r) {
                if (rows[r][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
                for (size_t j = 0; j < n; ++j) rows[r][j] -= q * rows[pivot_row][j];
                if (rows[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[pivot_row][col] == 0) continue;  // rank deficiency in this column
        if (rows[pivot_row][col] < 0)
            for (size_t j = 0; j < n; ++j) rows[pivot_row][j] = -rows[pivot_row][j];
        // reduce entries above the pivot into [0, pivot)
        for (size_t r = 0; r < pivot_row; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < n; ++j) rows[r][j] -= q * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

QMat hnf_q(const QMat& rows) {
    Integer den = 1;
    for (const auto& row : rows)
        for (const auto& x : row) den = lcm(den, x.get_den());
    ZMat z(rows.size(), ZVec(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[0].size(); ++j) {
            Rational s = rows[i][j] * Rational(den);
            z[i][j] = s.get_num();
        }
    ZMat h = hnf(std::move(z));
    QMat r(h.size(), QVec(rows[0].size()));
    for (size_t i = 0; i < h.size(); ++i)
        for (size_t j = 0; j < rows[0].size(); ++j) {
            r[i][j] = Rational(h[i][j], den);
            r[i][j].canonicalize();
        }
    return r;
}

Rational lattice_covolume(const QMat& basis) {
    return abs(qmat_det(basis));
}

QVec solve_row(const QMat& basis, const QVec& v) {
    return qvec_mat(v, qmat_inverse(basis));
}

bool lattice_contains(const QMat& basis, const QVec& v) {
    for (const auto& c : solve_row(basis, v))
        if (c.get_den() != 1) return false;
    return true;
}

QMat lattice_intersect(const QMat& a, const QMat& b) {
    // dual(L) has basis (B^{-1})^T; dual(L1 cap L2) = dual(L1) + dual(L2)
    QMat da = qmat_transpose(qmat_inverse(a));
    QMat db = qmat_transpose(qmat_inverse(b));
    QMat stacked = da;
    stacked.insert(stacked.end(), db.begin(), db.end());
    QMat sum = hnf_q(stacked);
    return qmat_transpose(qmat_inverse(sum));
}

}  // namespace smallgen
