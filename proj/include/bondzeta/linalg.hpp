#pragma once

// Dense complex linear algebra used throughout the library: LU determinants,
// a cyclic Jacobi eigensolver for Hermitian matrices, Kronecker products and
// the coefficients of det(I - uM) from power sums.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace bondzeta {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

/// Dense row-major complex matrix. Shape is at least 1x1 and every entry is
/// finite when built from caller data.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
  }
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> d);
  static ComplexMatrix diagonal(std::span<const double> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const cplx> entries() const noexcept { return data_; }

  ComplexMatrix transpose() const;
  ComplexMatrix adjoint() const;
  cplx trace() const;
  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<cplx> data_;
};

/// Coefficients c_0..c_N of a polynomial in a formal variable u.
class PolyCoeffs {
 public:
  explicit PolyCoeffs(std::vector<cplx> coeffs);
  explicit PolyCoeffs(std::size_t degree) : c_(degree + 1, cplx{}) {}

  std::size_t size() const noexcept { return c_.size(); }
  std::size_t degree() const noexcept { return c_.size() - 1; }
  cplx operator[](std::size_t k) const { return c_[k]; }
  cplx& operator[](std::size_t k) { return c_[k]; }
  std::span<const cplx> coefficients() const noexcept { return c_; }
  cplx evaluate(cplx u) const;

 private:
  std::vector<cplx> c_;
};

/// z^k by repeated multiplication.
cplx int_pow(cplx z, std::size_t k);

/// |lhs - rhs| / max(1, |lhs|, |rhs|); the metric for every identity check.
double relative_error(cplx lhs, cplx rhs);
/// Entrywise max of the same metric; shapes must agree.
double max_relative_error(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |a_ij - b_ij|.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

/// Determinant via LU with partial pivoting (largest-modulus pivot). A pivot
/// below 1e-14 times the largest entry makes the determinant exactly zero.
cplx lu_det(const ComplexMatrix& m);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic Jacobi on a Hermitian matrix; |H - H^dagger| must be <= 1e-12 entrywise.
HermitianEigen hermitian_eigen(const ComplexMatrix& h);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Coefficients of det(I - uM) through u^N from the power sums Tr(M^k) via
/// the Newton recursion k c_k = -sum_{j=1..k} Tr(M^j) c_{k-j}.
PolyCoeffs det_poly(const ComplexMatrix& m, std::size_t n);

}  // namespace bondzeta
