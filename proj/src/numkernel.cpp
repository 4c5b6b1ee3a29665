#include "holdercert/numkernel.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <numeric>

#include "holdercert/error.hpp"

namespace holdercert {

namespace {

void ensure_finite(const ComplexMatrix& m, const char* who) {
  if (!m.all_finite()) {
    raise(ErrorCode::ShapeMismatch, std::string(who) + ": matrix has non-finite entries");
  }
}

// (m + m*)/2 with a real diagonal.
ComplexMatrix hermitize(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix h(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
    h(i, i) = Complex(h(i, i).real(), 0.0);
  }
  return h;
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) acc += std::norm(a(i, j));
  return std::sqrt(acc);
}

// Orthogonalize column vec (length n) against the first `count` columns of basis,
// two classical Gram-Schmidt passes. Returns the resulting norm.
double orthogonalize_against(std::vector<Complex>& vec, const ComplexMatrix& basis, int count) {
  const int n = static_cast<int>(vec.size());
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < count; ++j) {
      Complex proj = 0.0;
      for (int i = 0; i < n; ++i) proj += std::conj(basis(i, j)) * vec[i];
      for (int i = 0; i < n; ++i) vec[i] -= proj * basis(i, j);
    }
  }
  double norm2 = 0.0;
  for (const auto& e : vec) norm2 += std::norm(e);
  return std::sqrt(norm2);
}

}  // namespace

SpectralDecomp herm_eig(const ComplexMatrix& m) {
  ensure_finite(m, "herm_eig");
  const int n = m.dim();

  double asym = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) asym = std::max(asym, std::abs(m(i, j) - std::conj(m(j, i))));
  if (asym > kHermTol * (1.0 + m.max_abs_entry())) {
    raise(ErrorCode::NotHermitian, "herm_eig: input is not Hermitian within tolerance");
  }

  ComplexMatrix a = hermitize(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double stop = kJacobiOffFactor * a.frobenius_norm();

  auto sweep_once = [&]() {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double habs = std::abs(apq);
        if (habs == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const Complex phase = apq / habs;

        // Unitary U = diag(1, conj(phase)) makes the 2x2 pivot real symmetric
        // [[app, habs], [habs, aqq]]; a real rotation then annihilates it.
        const double tau = (aqq - app) / (2.0 * habs);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex jp = -s * std::conj(phase);  // J(q,p)
        const Complex jq = c * std::conj(phase);   // J(q,q)

        // Rows: A <- J* A.
        for (int k = 0; k < n; ++k) {
          const Complex rp = a(p, k);
          const Complex rq = a(q, k);
          a(p, k) = c * rp - s * phase * rq;
          a(q, k) = s * rp + c * phase * rq;
        }
        // Columns: A <- A J.
        for (int k = 0; k < n; ++k) {
          const Complex cp = a(k, p);
          const Complex cq = a(k, q);
          a(k, p) = c * cp + jp * cq;
          a(k, q) = s * cp + jq * cq;
        }
        // Accumulate V <- V J.
        for (int k = 0; k < n; ++k) {
          const Complex vp = v(k, p);
          const Complex vq = v(k, q);
          v(k, p) = c * vp + jp * vq;
          v(k, q) = s * vp + jq * vq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
      }
    }
  };

  bool converged = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= stop) {
      converged = true;
      break;
    }
    sweep_once();
  }
  if (!converged && off_diagonal_norm(a) > stop) {
    raise(ErrorCode::NoConvergence, "herm_eig: Jacobi sweeps exceeded the cap");
  }
  // One polishing sweep past the stop threshold. Quadratic convergence pushes
  // the leftover off-diagonal mass to machine zero, so zero eigenvalues of
  // exactly singular inputs come out clean instead of at the threshold floor.
  sweep_once();

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  SpectralDecomp out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

SingularDecomp svd(const ComplexMatrix& m) {
  ensure_finite(m, "svd");
  const int n = m.dim();
  const SpectralDecomp eig = herm_eig(hermitize(m.adjoint() * m));

  // Right vectors come from m*m, but each singular value is refined as
  // ‖m·v_i‖ instead of sqrt of the eigenvalue: squaring floors small values
  // at sqrt(eps)·‖m‖, and that noise would survive every later power and
  // pollute density comparisons. The refined values sit at ~eps·‖m‖, below
  // the rank cut, so nearly singular directions are treated as exact zeros.
  ComplexMatrix v(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) v(i, j) = eig.eigenvectors(i, n - 1 - j);
  const ComplexMatrix w = m * v;
  std::vector<double> s(n);
  for (int j = 0; j < n; ++j) {
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) norm2 += std::norm(w(i, j));
    s[j] = std::sqrt(norm2);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return s[i] > s[j]; });

  SingularDecomp out;
  out.singular_values.resize(n);
  out.v = ComplexMatrix(n);
  for (int j = 0; j < n; ++j) {
    out.singular_values[j] = s[order[j]];
    for (int i = 0; i < n; ++i) out.v(i, j) = v(i, order[j]);
  }

  const double s_max = n > 0 ? out.singular_values[0] : 0.0;
  const double cut = kRankTol * s_max;
  int rank = 0;
  while (rank < n && out.singular_values[rank] > cut && out.singular_values[rank] > 0.0) ++rank;
  out.rank = rank;

  // Left vectors u_i = m v_i / s_i for the range, then a Gram-Schmidt cleanup;
  // the cleanup only moves columns at the noise floor, where the s_i weight
  // keeps the reconstruction unaffected.
  out.u = ComplexMatrix(n);
  std::vector<Complex> col(n);
  for (int j = 0; j < rank; ++j) {
    for (int i = 0; i < n; ++i) col[i] = w(i, order[j]) / out.singular_values[j];
    const double norm = orthogonalize_against(col, out.u, j);
    if (norm > 1e-8) {
      for (int i = 0; i < n; ++i) out.u(i, j) = col[i] / norm;
    } else {
      // Degenerate direction; fall back to basis completion below.
      for (int i = 0; i < n; ++i) out.u(i, j) = 0.0;
    }
  }
  for (int j = 0; j < n; ++j) {
    bool empty = true;
    for (int i = 0; i < n; ++i) {
      if (out.u(i, j) != Complex(0.0, 0.0)) {
        empty = false;
        break;
      }
    }
    if (!empty) continue;
    // Complete with the canonical basis vector leaving the largest residual.
    double best_norm = -1.0;
    std::vector<Complex> best_col;
    for (int k = 0; k < n; ++k) {
      std::fill(col.begin(), col.end(), Complex(0.0, 0.0));
      col[k] = 1.0;
      const double norm = orthogonalize_against(col, out.u, n);
      if (norm > best_norm) {
        best_norm = norm;
        best_col = col;
      }
    }
    for (int i = 0; i < n; ++i) out.u(i, j) = best_col[i] / best_norm;
  }
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  ensure_finite(m, "singular_values");
  const int n = m.dim();
  const SpectralDecomp eig = herm_eig(hermitize(m.adjoint() * m));
  // Same refinement as svd(): ‖m·v_i‖ dodges the sqrt(eps)·‖m‖ floor that
  // sqrt of an m*m eigenvalue would put under small singular values.
  const ComplexMatrix w = m * eig.eigenvectors;
  std::vector<double> s(n);
  for (int j = 0; j < n; ++j) {
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) norm2 += std::norm(w(i, j));
    s[j] = std::sqrt(norm2);
  }
  std::sort(s.begin(), s.end(), std::greater<double>());
  return s;
}

PolarDecomp polar(const ComplexMatrix& m) {
  const SingularDecomp d = svd(m);
  const int n = m.dim();

  PolarDecomp out;
  out.isometry_part = ComplexMatrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex iso = 0.0;
      for (int k = 0; k < d.rank; ++k) iso += d.u(i, k) * std::conj(d.v(j, k));
      out.isometry_part(i, j) = iso;
    }
  }
  out.unitary_extension = d.u * d.v.adjoint();

  ComplexMatrix mod(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < n; ++k) acc += d.v(i, k) * d.singular_values[k] * std::conj(d.v(j, k));
      mod(i, j) = acc;
    }
  }
  out.modulus = hermitize(mod);
  return out;
}

ComplexMatrix power(const ComplexMatrix& m, double t) {
  if (t < 0.0) {
    raise(ErrorCode::NegativeExponent, "power: exponent must be >= 0");
  }
  const SpectralDecomp eig = herm_eig(m);
  const int n = m.dim();
  double lam_max = 0.0;
  for (double lam : eig.eigenvalues) lam_max = std::max(lam_max, std::abs(lam));
  const double neg_floor = -kPsdTol * lam_max;
  const double zero_cut = kRankTol * lam_max;

  std::vector<double> powered(n);
  for (int i = 0; i < n; ++i) {
    double lam = eig.eigenvalues[i];
    if (lam < neg_floor) {
      raise(ErrorCode::NotPositive, "power: matrix is not positive semidefinite");
    }
    if (lam <= zero_cut) {
      powered[i] = 0.0;  // 0^t = 0, including t = 0
    } else if (t == 0.0) {
      powered[i] = 1.0;
    } else if (t == 1.0) {
      powered[i] = lam;
    } else if (t == 0.5) {
      powered[i] = std::sqrt(lam);
    } else {
      powered[i] = std::pow(lam, t);
    }
  }

  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < n; ++k) {
        if (powered[k] == 0.0) continue;
        acc += eig.eigenvectors(i, k) * powered[k] * std::conj(eig.eigenvectors(j, k));
      }
      out(i, j) = acc;
    }
  }
  return hermitize(out);
}

ComplexMatrix modulus(const ComplexMatrix& m) {
  // Via the singular decomposition, not sqrt of m*m: squaring would push
  // singular values below 1e-6 of the largest under the relative rank cut
  // (and small ones to the sqrt(eps) noise floor), losing directions that
  // are genuinely present in m.
  ensure_finite(m, "modulus");
  return polar(m).modulus;
}

ComplexMatrix range_projection(const ComplexMatrix& m) {
  const SingularDecomp d = svd(m);
  const int n = m.dim();
  ComplexMatrix p(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < d.rank; ++k) acc += d.u(i, k) * std::conj(d.u(j, k));
      p(i, j) = acc;
    }
  }
  return hermitize(p);
}

}  // namespace holdercert
