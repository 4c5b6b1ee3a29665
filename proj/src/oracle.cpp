#include "holdercert/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "holdercert/error.hpp"
#include "holdercert/numkernel.hpp"

namespace holdercert {

namespace {

ComplexMatrix ginibre_block(Xoshiro256pp& rng, int n, double scale) {
  ComplexMatrix m(n);
  const double root_half = std::sqrt(0.5);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double re = 0.0, im = 0.0;
      rng.gaussian_pair(re, im);
      m(i, j) = Complex(re * root_half, im * root_half) * scale;
    }
  }
  return m;
}

ComplexMatrix hermitian_block(Xoshiro256pp& rng, int n, double scale) {
  ComplexMatrix g = ginibre_block(rng, n, scale);
  ComplexMatrix h(n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = Complex(g(i, i).real(), 0.0);
    for (int j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (g(i, j) + std::conj(g(j, i)));
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return h;
}

ComplexMatrix positive_block(Xoshiro256pp& rng, int n, double scale) {
  ComplexMatrix g = ginibre_block(rng, n, 1.0);
  ComplexMatrix p(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < n; ++k) acc += std::conj(g(k, i)) * g(k, j);
      if (i == j) {
        p(i, i) = Complex(acc.real() * scale, 0.0);
      } else {
        p(i, j) = acc * scale;
        p(j, i) = std::conj(acc) * scale;
      }
    }
  }
  return p;
}

ComplexMatrix unitary_block(Xoshiro256pp& rng, int n) {
  ComplexMatrix g = ginibre_block(rng, n, 1.0);
  // modified Gram-Schmidt, two passes per column
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        Complex proj = 0.0;
        for (int i = 0; i < n; ++i) proj += std::conj(g(i, k)) * g(i, j);
        for (int i = 0; i < n; ++i) g(i, j) -= proj * g(i, k);
      }
    }
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) norm2 += std::norm(g(i, j));
    const double norm = std::sqrt(norm2);
    for (int i = 0; i < n; ++i) g(i, j) /= norm;
  }
  return g;
}

std::uint64_t kind_tag(OperatorKind kind) { return static_cast<std::uint64_t>(kind) + 1; }

}  // namespace

BlockOperator random_operator(const TraceAlgebra& alg, const GeneratorSpec& spec) {
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) {
    raise(ErrorCode::UnknownKind, "random_operator: scale must be finite and positive");
  }
  if (spec.kind == OperatorKind::EqualityPair) {
    return random_equality_pair(alg, spec.seed, spec.scale, 2.0).first;
  }

  Xoshiro256pp rng(derive_seed(spec.seed, kind_tag(spec.kind)));
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(alg.block_dims.size());
  for (int d : alg.block_dims) {
    switch (spec.kind) {
      case OperatorKind::Ginibre:
        blocks.push_back(ginibre_block(rng, d, spec.scale));
        break;
      case OperatorKind::Hermitian:
        blocks.push_back(hermitian_block(rng, d, spec.scale));
        break;
      case OperatorKind::Positive:
        blocks.push_back(positive_block(rng, d, spec.scale));
        break;
      case OperatorKind::Unitary:
        blocks.push_back(unitary_block(rng, d));
        break;
      default:
        raise(ErrorCode::UnknownKind, "random_operator: unrecognized generator kind");
    }
  }
  return BlockOperator(std::move(blocks));
}

std::pair<BlockOperator, BlockOperator> random_equality_pair(const TraceAlgebra& alg,
                                                             std::uint64_t seed, double scale,
                                                             double p) {
  if (!std::isfinite(p) || p <= 1.0) {
    raise(ErrorCode::BadExponent, "random_equality_pair: needs finite p > 1");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    raise(ErrorCode::UnknownKind, "random_equality_pair: scale must be finite and positive");
  }
  Xoshiro256pp rng(derive_seed(seed, kind_tag(OperatorKind::EqualityPair)));

  std::vector<ComplexMatrix> ablocks;
  for (int d : alg.block_dims) ablocks.push_back(ginibre_block(rng, d, scale));
  BlockOperator a(std::move(ablocks));

  const double q = conjugate_exponent(p);
  const double na = pnorm(alg, a, p);
  // density of |a|, unit trace; |b|^q proportional to it forces equality
  const BlockOperator density = power(modulus(Complex(1.0 / na) * a), p);
  const double c = rng.uniform(0.5, 2.0);
  const BlockOperator mb = power(Complex(c) * density, 1.0 / q);

  std::vector<ComplexMatrix> vblocks;
  for (int d : alg.block_dims) vblocks.push_back(unitary_block(rng, d));
  BlockOperator v(std::move(vblocks));

  return {std::move(a), v * mb};
}

double dual_norm_search(const TraceAlgebra& alg, const BlockOperator& a, double p, int budget,
                        std::uint64_t seed) {
  if (!std::isfinite(p) || p <= 1.0) {
    raise(ErrorCode::BadExponent, "dual_norm_search: needs finite p > 1");
  }
  if (budget < 1) {
    raise(ErrorCode::ZeroBudget, "dual_norm_search: budget must be at least 1");
  }
  ensure_conforms(alg, a, "dual_norm_search");
  if (pnorm(alg, a, p) == 0.0) return 0.0;

  const double q = conjugate_exponent(p);
  Xoshiro256pp rng(seed);

  double best_value = 0.0;
  BlockOperator best_b;  // q-normalized, phase aligned so τ(ab*) >= 0
  bool have_best = false;

  for (int step = 0; step < budget; ++step) {
    std::vector<ComplexMatrix> cand_blocks;
    cand_blocks.reserve(alg.block_dims.size());
    const int phase_in_block = step % 51;
    if (phase_in_block == 0 || !have_best) {
      for (int d : alg.block_dims) cand_blocks.push_back(ginibre_block(rng, d, 1.0));
    } else {
      const double radius = 0.5 * std::pow(0.85, phase_in_block - 1);
      for (int k = 0; k < alg.block_count(); ++k) {
        ComplexMatrix blk = ginibre_block(rng, alg.block_dims[k], 1.0);
        blk *= Complex(radius);
        blk += best_b.block(k);
        cand_blocks.push_back(std::move(blk));
      }
    }
    BlockOperator cand(std::move(cand_blocks));
    const double nq = pnorm(alg, cand, q);
    if (nq == 0.0) continue;
    const Complex pairing = inner(alg, a, cand);
    const double value = std::abs(pairing) / nq;
    if (value > best_value) {
      best_value = value;
      const Complex align = pairing == Complex(0.0) ? Complex(1.0) : pairing / std::abs(pairing);
      best_b = (align / nq) * cand;
      have_best = true;
    }
  }
  return best_value;
}

double integer_power_check(const ComplexMatrix& m, int k) {
  if (k < 0) {
    raise(ErrorCode::NegativeExponent, "integer_power_check: k must be >= 0");
  }
  const ComplexMatrix computed = power(m, static_cast<double>(k));
  ComplexMatrix reference = range_projection(m);
  if (k >= 1) {
    reference = m;
    for (int i = 1; i < k; ++i) reference = reference * m;
  }
  ComplexMatrix diff = computed;
  diff -= reference;
  return diff.frobenius_norm();
}

}  // namespace holdercert
