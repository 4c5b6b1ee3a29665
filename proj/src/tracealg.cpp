#include "holdercert/tracealg.hpp"

#include <cmath>
#include <string>

#include "holdercert/error.hpp"
#include "holdercert/numkernel.hpp"

namespace holdercert {

TraceAlgebra::TraceAlgebra(std::vector<int> dims, std::vector<double> ws)
    : block_dims(std::move(dims)), weights(std::move(ws)) {
  if (block_dims.empty()) {
    raise(ErrorCode::InvalidAlgebra, "algebra needs at least one block");
  }
  if (block_dims.size() != weights.size()) {
    raise(ErrorCode::InvalidAlgebra, "block_dims and weights differ in length");
  }
  for (int d : block_dims) {
    if (d < 1) {
      raise(ErrorCode::InvalidAlgebra, "block dimension must be at least 1, got " + std::to_string(d));
    }
  }
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      raise(ErrorCode::InvalidAlgebra, "trace weights must be finite and strictly positive");
    }
  }
}

bool operator==(const TraceAlgebra& a, const TraceAlgebra& b) {
  return a.block_dims == b.block_dims && a.weights == b.weights;
}

BlockOperator BlockOperator::zero(const TraceAlgebra& alg) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(alg.block_dims.size());
  for (int d : alg.block_dims) blocks.emplace_back(d);
  return BlockOperator(std::move(blocks));
}

BlockOperator BlockOperator::identity(const TraceAlgebra& alg) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(alg.block_dims.size());
  for (int d : alg.block_dims) blocks.push_back(ComplexMatrix::identity(d));
  return BlockOperator(std::move(blocks));
}

BlockOperator BlockOperator::adjoint() const {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& b : blocks_) blocks.push_back(b.adjoint());
  return BlockOperator(std::move(blocks));
}

bool BlockOperator::all_finite() const {
  for (const auto& b : blocks_) {
    if (!b.all_finite()) return false;
  }
  return true;
}

bool BlockOperator::is_zero() const {
  for (const auto& b : blocks_) {
    if (!b.is_zero()) return false;
  }
  return true;
}

namespace {

void check_same_shape(const BlockOperator& a, const BlockOperator& b, const char* who) {
  if (a.block_count() != b.block_count()) {
    raise(ErrorCode::ShapeMismatch, std::string(who) + ": operands have different block counts");
  }
  for (int k = 0; k < a.block_count(); ++k) {
    if (a.block(k).dim() != b.block(k).dim()) {
      raise(ErrorCode::ShapeMismatch,
            std::string(who) + ": block " + std::to_string(k) + " dimensions differ");
    }
  }
}

}  // namespace

BlockOperator& BlockOperator::operator+=(const BlockOperator& rhs) {
  check_same_shape(*this, rhs, "operator+");
  for (int k = 0; k < block_count(); ++k) blocks_[k] += rhs.block(k);
  return *this;
}

BlockOperator& BlockOperator::operator-=(const BlockOperator& rhs) {
  check_same_shape(*this, rhs, "operator-");
  for (int k = 0; k < block_count(); ++k) blocks_[k] -= rhs.block(k);
  return *this;
}

BlockOperator& BlockOperator::operator*=(Complex scalar) {
  for (auto& b : blocks_) b *= scalar;
  return *this;
}

BlockOperator operator+(BlockOperator lhs, const BlockOperator& rhs) {
  lhs += rhs;
  return lhs;
}

BlockOperator operator-(BlockOperator lhs, const BlockOperator& rhs) {
  lhs -= rhs;
  return lhs;
}

BlockOperator operator*(const BlockOperator& lhs, const BlockOperator& rhs) {
  check_same_shape(lhs, rhs, "operator*");
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(lhs.block_count());
  for (int k = 0; k < lhs.block_count(); ++k) blocks.push_back(lhs.block(k) * rhs.block(k));
  return BlockOperator(std::move(blocks));
}

BlockOperator operator*(Complex scalar, BlockOperator x) {
  x *= scalar;
  return x;
}

BlockOperator operator*(BlockOperator x, Complex scalar) {
  x *= scalar;
  return x;
}

void ensure_conforms(const TraceAlgebra& alg, const BlockOperator& x, const char* who) {
  if (x.block_count() != alg.block_count()) {
    raise(ErrorCode::ShapeMismatch,
          std::string(who) + ": operator has " + std::to_string(x.block_count()) +
              " blocks, algebra has " + std::to_string(alg.block_count()));
  }
  for (int k = 0; k < alg.block_count(); ++k) {
    if (x.block(k).dim() != alg.block_dims[k]) {
      raise(ErrorCode::ShapeMismatch,
            std::string(who) + ": block " + std::to_string(k) + " is " +
                std::to_string(x.block(k).dim()) + "x" + std::to_string(x.block(k).dim()) +
                ", algebra wants " + std::to_string(alg.block_dims[k]));
    }
  }
}

Complex trace(const TraceAlgebra& alg, const BlockOperator& x) {
  ensure_conforms(alg, x, "trace");
  Complex acc = 0.0;
  for (int k = 0; k < alg.block_count(); ++k) {
    Complex t = 0.0;
    const ComplexMatrix& b = x.block(k);
    for (int i = 0; i < b.dim(); ++i) t += b(i, i);
    acc += alg.weights[k] * t;
  }
  return acc;
}

Complex inner(const TraceAlgebra& alg, const BlockOperator& x, const BlockOperator& y) {
  ensure_conforms(alg, x, "inner");
  ensure_conforms(alg, y, "inner");
  Complex acc = 0.0;
  for (int k = 0; k < alg.block_count(); ++k) {
    acc += alg.weights[k] * hs_dot(x.block(k), y.block(k));
  }
  return acc;
}

double pnorm(const TraceAlgebra& alg, const BlockOperator& x, double p) {
  ensure_conforms(alg, x, "pnorm");
  if (p == kInfiniteExponent) return opnorm(alg, x);
  if (!(p >= 1.0) || !std::isfinite(p)) {
    raise(ErrorCode::BadExponent, "pnorm needs p >= 1, got " + std::to_string(p));
  }
  if (p == 2.0) {
    double acc = 0.0;
    for (int k = 0; k < alg.block_count(); ++k) {
      double f = x.block(k).frobenius_norm();
      acc += alg.weights[k] * f * f;
    }
    return std::sqrt(acc);
  }
  // Factor out the largest singular value so s^p never overflows at large p.
  std::vector<std::vector<double>> spectra(alg.block_count());
  double smax = 0.0;
  for (int k = 0; k < alg.block_count(); ++k) {
    spectra[k] = singular_values(x.block(k));
    for (double s : spectra[k]) smax = std::max(smax, s);
  }
  if (smax == 0.0) return 0.0;
  double acc = 0.0;
  for (int k = 0; k < alg.block_count(); ++k) {
    double part = 0.0;
    for (double s : spectra[k]) part += std::pow(s / smax, p);
    acc += alg.weights[k] * part;
  }
  return smax * std::pow(acc, 1.0 / p);
}

double opnorm(const TraceAlgebra& alg, const BlockOperator& x) {
  ensure_conforms(alg, x, "opnorm");
  double smax = 0.0;
  for (int k = 0; k < alg.block_count(); ++k) {
    for (double s : singular_values(x.block(k))) smax = std::max(smax, s);
  }
  return smax;
}

double conjugate_exponent(double p) {
  if (p == kInfiniteExponent) return 1.0;
  if (!(p >= 1.0) || !std::isfinite(p)) {
    raise(ErrorCode::BadExponent, "conjugate_exponent needs p in [1, inf], got " + std::to_string(p));
  }
  if (p == 1.0) return kInfiniteExponent;
  return p / (p - 1.0);
}

BlockOperator modulus(const BlockOperator& x) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(x.block_count());
  for (int k = 0; k < x.block_count(); ++k) blocks.push_back(modulus(x.block(k)));
  return BlockOperator(std::move(blocks));
}

BlockOperator power(const BlockOperator& x, double t) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(x.block_count());
  for (int k = 0; k < x.block_count(); ++k) blocks.push_back(power(x.block(k), t));
  return BlockOperator(std::move(blocks));
}

BlockOperator range_projection(const BlockOperator& x) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(x.block_count());
  for (int k = 0; k < x.block_count(); ++k) blocks.push_back(range_projection(x.block(k)));
  return BlockOperator(std::move(blocks));
}

}  // namespace holdercert
