#pragma once

#include <vector>

#include "holdercert/complex_matrix.hpp"

namespace holdercert {

// Numerical cutoffs. The underlying identities are exact; every rank or
// positivity decision below goes through one of these.
inline constexpr double kHermTol = 1e-12;   // Hermiticity gate, relative to max entry
inline constexpr double kPsdTol = 1e-10;    // eigenvalue negativity gate, relative to |lambda|_max
inline constexpr double kEigTol = 1e-10;    // reconstruction / unitarity budget
inline constexpr double kRankTol = 1e-12;   // rank cut, relative to largest singular value
inline constexpr double kJacobiOffFactor = 1e-14;  // off-diagonal stop, relative to Frobenius norm
inline constexpr int kMaxJacobiSweeps = 100;

struct SpectralDecomp {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // unitary; column i pairs with eigenvalues[i]
};

struct SingularDecomp {
  ComplexMatrix u;
  std::vector<double> singular_values;  // descending, all >= 0
  ComplexMatrix v;
  int rank;  // count of singular values > kRankTol * s_max
};

struct PolarDecomp {
  ComplexMatrix isometry_part;      // canonical partial isometry u; u*u is the support projection of |m|
  ComplexMatrix modulus;            // |m|, positive semidefinite
  ComplexMatrix unitary_extension;  // unitary agreeing with u on the support of |m|
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
SpectralDecomp herm_eig(const ComplexMatrix& m);

/// Singular value decomposition m = u diag(s) v*.
SingularDecomp svd(const ComplexMatrix& m);

/// Singular values only, descending.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Polar decomposition m = u |m|.
PolarDecomp polar(const ComplexMatrix& m);

/// Fractional power of a positive semidefinite matrix, with the convention
/// 0^t = 0 for every t >= 0, so power(m, 0) is the support projection of m.
ComplexMatrix power(const ComplexMatrix& m, double t);

/// |m| = (m* m)^(1/2).
ComplexMatrix modulus(const ComplexMatrix& m);

/// Orthogonal projection onto the column space of m.
ComplexMatrix range_projection(const ComplexMatrix& m);

}  // namespace holdercert
