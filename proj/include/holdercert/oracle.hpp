#pragma once

#include <cstdint>
#include <utility>

#include "holdercert/rng.hpp"
#include "holdercert/tracealg.hpp"

namespace holdercert {

enum class OperatorKind { Ginibre, Positive, Unitary, Hermitian, EqualityPair };

/// Fully determines a random operator: same (seed, kind, scale, algebra)
/// always reproduces the same bytes.
struct GeneratorSpec {
  std::uint64_t seed = 0;
  OperatorKind kind = OperatorKind::Ginibre;
  double scale = 1.0;
};

/// Seeded operator draw. Kinds: ginibre = scale·(g₁+ig₂)/√2 entrywise,
/// hermitian = scale·(g+g*)/2 (bitwise Hermitian), positive = scale·g*g,
/// unitary = Gram-Schmidt orthonormalized ginibre (scale ignored),
/// equality_pair = the left element of random_equality_pair at p = 2.
BlockOperator random_operator(const TraceAlgebra& alg, const GeneratorSpec& spec);

/// A pair (a, b) attaining equality at exponent p: |b|^q is a random positive
/// multiple of |a|^p/‖a‖_p^p and the polar part of b is an independent random
/// unitary. The theorem's condition constrains only the moduli, so the
/// randomized polar parts keep tests honest.
std::pair<BlockOperator, BlockOperator> random_equality_pair(const TraceAlgebra& alg,
                                                             std::uint64_t seed, double scale,
                                                             double p);

/// Brute-force estimate of sup{ |τ(ab*)| : ‖b‖_q = 1 }: `budget` candidate
/// directions, one fresh Ginibre draw followed by 50 local refinements with
/// decaying radius around the running best. Monotone in budget for a fixed
/// seed. The closed-form dual witness is the real answer; this only
/// corroborates it from below.
double dual_norm_search(const TraceAlgebra& alg, const BlockOperator& a, double p, int budget,
                        std::uint64_t seed);

/// ‖power(m, k) − m·m·…·m‖_F with k literal factors; for k = 0 the reference
/// is the support projection (computed through the SVD route), matching the
/// 0^0 = 0 convention rather than the identity.
double integer_power_check(const ComplexMatrix& m, int k);

}  // namespace holdercert
