#pragma once

#include <complex>
#include <vector>

namespace holdercert {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim) {}
  ComplexMatrix(int dim, std::vector<Complex> entries);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(const std::vector<Complex>& values);

  int dim() const { return dim_; }

  Complex& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
  const Complex& operator()(int i, int j) const {
    return entries_[static_cast<size_t>(i) * dim_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }
  std::vector<Complex>& entries() { return entries_; }

  ComplexMatrix adjoint() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

  double frobenius_norm() const;
  double max_abs_entry() const;
  bool all_finite() const;
  bool is_zero() const;

 private:
  int dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);

/// tr(a * b^*) without forming the product.
Complex hs_dot(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace holdercert
