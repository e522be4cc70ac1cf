#pragma once

#include <string>
#include <vector>

#include "k3calc/numeric.hpp"

namespace k3calc {

// Dense integer matrix with exact arithmetic. Small sizes only (lattice
// ranks); the algorithms favour exactness over asymptotics.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<Int> row(int i) const;
    std::vector<Int> col(int j) const;

    IntMat operator*(const IntMat& o) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator+(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    IntMat transposed() const;
    IntMat negated() const;
    bool is_symmetric() const;
    bool is_zero() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

    std::string str() const;  // "[[1, 2], [3, 4]]"

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// Exact determinant by fraction-free Bareiss elimination.
Int bareiss_determinant(IntMat m);

// Smith normal form: u*m*v = s with s diagonal, d_i | d_{i+1}, d_i >= 0,
// det(u), det(v) in {+1, -1}. Nonzero invariant factors occupy the leading
// diagonal slots.
struct SmithResult {
    IntMat u, s, v;
    std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
};
SmithResult smith_normal_form(const IntMat& m);

// Exact inverse of a matrix with determinant +-1 (adjugate method).
IntMat unimodular_inverse(const IntMat& m);

// Saturated basis of {x : m*x = 0} as columns; always a primitive sublattice
// of Z^cols because it is spanned by columns of a unimodular matrix.
std::vector<std::vector<Int>> integer_kernel_basis(const IntMat& m);

// Coefficients of det(x*I - m), leading coefficient first (size n+1).
// Computed from sums of principal minors; exact.
std::vector<Int> characteristic_polynomial(const IntMat& m);

}  // namespace k3calc
