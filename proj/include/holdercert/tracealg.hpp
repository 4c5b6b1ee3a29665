#pragma once

#include <limits>
#include <vector>

#include "holdercert/complex_matrix.hpp"

namespace holdercert {

inline constexpr double kInfiniteExponent = std::numeric_limits<double>::infinity();

/// Block-diagonal *-algebra carrying the weighted trace
/// tau(x) = sum_k weights[k] * Tr(x_k). Strictly positive weights keep tau faithful.
struct TraceAlgebra {
  std::vector<int> block_dims;
  std::vector<double> weights;

  TraceAlgebra(std::vector<int> dims, std::vector<double> ws);

  int block_count() const { return static_cast<int>(block_dims.size()); }
};

bool operator==(const TraceAlgebra& a, const TraceAlgebra& b);

/// Element of a block-diagonal algebra: one square block per summand.
class BlockOperator {
 public:
  BlockOperator() = default;
  explicit BlockOperator(std::vector<ComplexMatrix> blocks) : blocks_(std::move(blocks)) {}

  static BlockOperator zero(const TraceAlgebra& alg);
  static BlockOperator identity(const TraceAlgebra& alg);

  int block_count() const { return static_cast<int>(blocks_.size()); }
  const ComplexMatrix& block(int k) const { return blocks_[k]; }
  ComplexMatrix& block(int k) { return blocks_[k]; }
  const std::vector<ComplexMatrix>& blocks() const { return blocks_; }

  BlockOperator adjoint() const;
  bool all_finite() const;
  bool is_zero() const;

  BlockOperator& operator+=(const BlockOperator& rhs);
  BlockOperator& operator-=(const BlockOperator& rhs);
  BlockOperator& operator*=(Complex scalar);

 private:
  std::vector<ComplexMatrix> blocks_;
};

BlockOperator operator+(BlockOperator lhs, const BlockOperator& rhs);
BlockOperator operator-(BlockOperator lhs, const BlockOperator& rhs);
BlockOperator operator*(const BlockOperator& lhs, const BlockOperator& rhs);
BlockOperator operator*(Complex scalar, BlockOperator x);
BlockOperator operator*(BlockOperator x, Complex scalar);

/// Throws ShapeMismatch unless x has one block per algebra summand of matching size.
void ensure_conforms(const TraceAlgebra& alg, const BlockOperator& x, const char* who);

Complex trace(const TraceAlgebra& alg, const BlockOperator& x);
Complex inner(const TraceAlgebra& alg, const BlockOperator& x, const BlockOperator& y);

/// Schatten norm (tau |x|^p)^(1/p); p = kInfiniteExponent delegates to opnorm.
double pnorm(const TraceAlgebra& alg, const BlockOperator& x, double p);

/// Operator norm: largest singular value over all blocks (weights do not enter).
double opnorm(const TraceAlgebra& alg, const BlockOperator& x);

/// q with 1/p + 1/q = 1; maps 1 to the infinity sentinel and back.
double conjugate_exponent(double p);

// Blockwise lifts of the matrix kernel.
BlockOperator modulus(const BlockOperator& x);
BlockOperator power(const BlockOperator& x, double t);
BlockOperator range_projection(const BlockOperator& x);

}  // namespace holdercert
