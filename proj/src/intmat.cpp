#include "k3calc/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace k3calc {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw Error("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMat::row(int i) const {
    std::vector<Int> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Int> IntMat::col(int j) const {
    std::vector<Int> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw Error("matrix dimension mismatch in product");
    IntMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

std::vector<Int> IntMat::operator*(const std::vector<Int>& v) const {
    if (cols_ != static_cast<int>(v.size())) throw Error("matrix/vector dimension mismatch");
    std::vector<Int> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix dimension mismatch in difference");
    IntMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix dimension mismatch in sum");
    IntMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

IntMat IntMat::transposed() const {
    IntMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMat IntMat::negated() const {
    IntMat r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
}

bool IntMat::is_symmetric() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

Int bareiss_determinant(IntMat m) {
    if (!m.square()) throw Error("determinant of non-square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;  // whole column zero below: singular
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // divides exactly (Bareiss)
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

// Row operation used by SNF: replace rows (t, i) by an unimodular combination
// making a(t,pivot_col) = gcd and a(i,pivot_col) = 0. Mirrors onto u.
void gcd_row_op(IntMat& a, IntMat& u, int t, int i, int col) {
    Int p = a.at(t, col), q = a.at(i, col);
    if (q == 0) return;
    if (p == 0) {
        a.swap_rows(t, i);
        u.swap_rows(t, i);
        return;
    }
    if (q % p == 0) {
        // Pure shear: row t untouched, so the clearing loop makes progress.
        Int f = q / p;
        for (IntMat* m : {&a, &u})
            for (int j = 0; j < m->cols(); ++j) m->at(i, j) -= f * m->at(t, j);
        return;
    }
    Egcd e = extended_gcd(p, q);
    Int pp = p / e.g, qq = q / e.g;
    for (IntMat* m : {&a, &u}) {
        for (int j = 0; j < m->cols(); ++j) {
            Int rt = m->at(t, j), ri = m->at(i, j);
            m->at(t, j) = e.x * rt + e.y * ri;
            m->at(i, j) = -qq * rt + pp * ri;
        }
    }
}

void gcd_col_op(IntMat& a, IntMat& v, int t, int j, int row) {
    Int p = a.at(row, t), q = a.at(row, j);
    if (q == 0) return;
    if (p == 0) {
        a.swap_cols(t, j);
        v.swap_cols(t, j);
        return;
    }
    if (q % p == 0) {
        Int f = q / p;
        for (IntMat* m : {&a, &v})
            for (int i = 0; i < m->rows(); ++i) m->at(i, j) -= f * m->at(i, t);
        return;
    }
    Egcd e = extended_gcd(p, q);
    Int pp = p / e.g, qq = q / e.g;
    for (IntMat* m : {&a, &v}) {
        for (int i = 0; i < m->rows(); ++i) {
            Int ct = m->at(i, t), cj = m->at(i, j);
            m->at(i, t) = e.x * ct + e.y * cj;
            m->at(i, j) = -qq * ct + pp * cj;
        }
    }
}

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
    IntMat a = m;
    int rows = a.rows(), cols = a.cols();
    IntMat u = IntMat::identity(rows);
    IntMat v = IntMat::identity(cols);
    int t = 0;
    int bound = std::min(rows, cols);
    while (t < bound) {
        // Pick the absolutely smallest nonzero entry of the trailing block as
        // pivot (keeps intermediate values small).
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const Int& x = a.at(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (pi < 0 || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // trailing block is zero
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            bool changed = true;
            while (changed) {
                changed = false;
                for (int i = t + 1; i < rows; ++i)
                    if (a.at(i, t) != 0) {
                        gcd_row_op(a, u, t, i, t);
                        changed = true;
                    }
                for (int j = t + 1; j < cols; ++j)
                    if (a.at(t, j) != 0) {
                        gcd_col_op(a, v, t, j, t);
                        changed = true;
                    }
            }
            // Enforce d_t | every remaining entry; if not, mix the offending
            // row into row t and clear again.
            const Int& d = a.at(t, t);
            int bi = -1, bj = -1;
            for (int i = t + 1; i < rows && bi < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (a.at(i, j) % d != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            for (int j = 0; j < cols; ++j) a.at(t, j) += a.at(bi, j);
            for (int j = 0; j < rows; ++j) u.at(t, j) += u.at(bi, j);
            (void)bj;
        }
        ++t;
    }
    for (int i = 0; i < bound; ++i)
        if (a.at(i, i) < 0) {
            for (int j = 0; j < cols; ++j) a.at(i, j) = -a.at(i, j);
            for (int j = 0; j < rows; ++j) u.at(i, j) = -u.at(i, j);
        }
    return {u, a, v};
}

std::vector<Int> SmithResult::invariant_factors() const {
    std::vector<Int> f;
    int bound = std::min(s.rows(), s.cols());
    for (int i = 0; i < bound; ++i)
        if (s.at(i, i) != 0) f.push_back(s.at(i, i));
    return f;
}

IntMat unimodular_inverse(const IntMat& m) {
    if (!m.square()) throw Error("inverse of non-square matrix");
    int n = m.rows();
    Int det = bareiss_determinant(m);
    if (det != 1 && det != -1) throw Error("matrix is not invertible over the integers");
    IntMat inv(n, n);
    // Adjugate via cofactors; fine at these sizes.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMat minor(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = m.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Int cof = bareiss_determinant(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            inv.at(j, i) = cof * det;  // det = +-1, so this is adj/det
        }
    return inv;
}

std::vector<std::vector<Int>> integer_kernel_basis(const IntMat& m) {
    // u*m*v = s  =>  m*x = 0 iff s*(v^{-1}x) = 0, so the kernel is spanned by
    // the columns of v beyond the rank. Unimodularity of v makes it saturated.
    SmithResult snf = smith_normal_form(m);
    int rank = static_cast<int>(snf.invariant_factors().size());
    std::vector<std::vector<Int>> basis;
    for (int j = rank; j < m.cols(); ++j) basis.push_back(snf.v.col(j));
    return basis;
}

std::vector<Int> characteristic_polynomial(const IntMat& m) {
    if (!m.square()) throw Error("characteristic polynomial of non-square matrix");
    int n = m.rows();
    // det(xI - m) = sum_k (-1)^k e_k x^{n-k}, e_k = sum of principal k-minors.
    std::vector<Int> coeffs(n + 1);
    coeffs[0] = 1;
    std::vector<int> idx;
    for (int k = 1; k <= n; ++k) {
        Int ek = 0;
        idx.assign(k, 0);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            IntMat sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(idx[i], idx[j]);
            ek += bareiss_determinant(sub);
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
        coeffs[k] = (k % 2 == 0) ? ek : -ek;
    }
    return coeffs;
}

}  // namespace k3calc
