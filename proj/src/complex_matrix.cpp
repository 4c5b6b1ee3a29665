#include "holdercert/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace holdercert {

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<size_t>(dim) * dim) {
    throw std::invalid_argument("entry count does not match dimension");
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& values) {
  ComplexMatrix m(static_cast<int>(values.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

double ComplexMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const auto& e : entries_) acc += std::norm(e);
  return std::sqrt(acc);
}

double ComplexMatrix::max_abs_entry() const {
  double acc = 0.0;
  for (const auto& e : entries_) acc = std::max(acc, std::abs(e));
  return acc;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  }
  return true;
}

bool ComplexMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (e.real() != 0.0 || e.imag() != 0.0) return false;
  }
  return true;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  const int n = lhs.dim();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex lik = lhs(i, k);
      if (lik == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < n; ++j) r(i, j) += lik * rhs(k, j);
    }
  }
  return r;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
  m *= scalar;
  return m;
}

ComplexMatrix operator*(ComplexMatrix m, Complex scalar) {
  m *= scalar;
  return m;
}

Complex hs_dot(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex acc = 0.0;
  const auto& ae = a.entries();
  const auto& be = b.entries();
  for (size_t k = 0; k < ae.size(); ++k) acc += ae[k] * std::conj(be[k]);
  return acc;
}

}  // namespace holdercert
