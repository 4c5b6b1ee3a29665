#pragma once

#include <array>
#include <string>
#include <utility>

#include "holdercert/tracealg.hpp"

namespace holdercert {

inline constexpr double kDefaultCertTol = 1e-8;
inline constexpr double kGraceFactor = 10.0;   // gray zone spans (tol, grace*tol]
inline constexpr double kChainAbsTol = 1e-12;  // per-step slack floor in proof_replay

/// The inequality ‖ab*‖₁ ≤ ‖a‖_p·‖b‖_q evaluated on a concrete pair.
struct HolderReport {
  double p = 0.0;
  double q = 0.0;
  double lhs = 0.0;           // ‖ab*‖₁
  double rhs = 0.0;           // ‖a‖_p·‖b‖_q
  double gap = 0.0;           // rhs - lhs
  double relative_gap = 0.0;  // gap/rhs, 0 when rhs = 0
};

enum class EqualityStatus { Equality, StrictInequality, Indeterminate };

const char* equality_status_name(EqualityStatus status);

/// Verdict on whether the pair attains equality, with the deviation of the
/// normalized moduli densities as the certified witness quantity.
struct EqualityCertificate {
  EqualityStatus status = EqualityStatus::Indeterminate;
  double deviation = 0.0;  // ‖ |a|^p/‖a‖_p^p − |b|^q/‖b‖_q^q ‖₁
  double lambda = 0.0;     // ‖a‖_p^p/‖b‖_q^q
  double tolerance = kDefaultCertTol;
  std::string reason;      // nonempty only for Indeterminate
  HolderReport report;
};

struct CauchySchwarzCertificate {
  bool holds = false;
  bool equality = false;
  bool has_lambda = false;
  double lambda = 0.0;          // ‖x‖₂/‖y‖₂ when equality and y ≠ 0
  double inner_real = 0.0;      // Re⟨x,y⟩
  double inner_abs = 0.0;       // |⟨x,y⟩|
  double norm_product = 0.0;    // ‖x‖₂·‖y‖₂
  double residual = 0.0;        // ‖x − λy‖₂ when lambda is present
  double residual_bound = 0.0;  // certified cap on residual implied by near-equality
  double tolerance = kDefaultCertTol;
};

struct TracePositivityCertificate {
  bool holds = false;
  bool equality = false;
  bool positive = false;
  double trace_abs = 0.0;      // |τ(a)|
  double trace_modulus = 0.0;  // τ(|a|)
  double tolerance = kDefaultCertTol;
};

struct SwapNormalize {
  double p_eff = 0.0;  // in (1, 2]
  bool swapped = false;
};

/// Every intermediate of the inequality chain
///   τ(xy*) ≤ ‖x‖₂‖y‖₂ ≤ τ(|b|²|a|^{2−p})^{1/2} ≤ (τ|a|^{(2−p)r′})^{1/(2r′)} ≤ 1
/// evaluated on the unit-norm pair, with x = w*|a|^{p/2} and y = |b||a|^{1−p/2}.
struct ProofChainTrace {
  BlockOperator normalized_a;  // the operand in the p_eff role, scaled to unit p_eff-norm
  BlockOperator normalized_b;  // the operand in the conjugate role, unit q_eff-norm
  BlockOperator w;             // polar factor of |a||b|
  BlockOperator x;
  BlockOperator y;
  double p = 0.0;      // exponent as given
  double p_eff = 0.0;  // after swap_normalize
  bool swapped = false;
  double r = 0.0;        // q_eff/2
  double r_prime = 0.0;  // conjugate of r; +inf when p_eff = 2
  double s0 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  std::array<double, 4> slacks{};  // {s1-s0, s2-s1, s3-s2, 1-s3}
  bool chain_ok = false;
  double exponent_identity_error = 0.0;  // |(2-p_eff)·r_prime − p_eff|
};

struct POneCertificate {
  bool equality = false;   // ‖ab*‖₁ = ‖a‖₁·‖b‖_∞ within tol
  bool condition = false;  // p_a|b| = ‖b‖_∞·p_a and p_a|b| = |b|p_a within tol
  double lhs = 0.0;
  double rhs = 0.0;
  double spectral_defect = 0.0;     // ‖p_a|b| − ‖b‖_∞·p_a‖₁
  double commutation_defect = 0.0;  // ‖p_a|b| − |b|p_a‖₁
  double tolerance = kDefaultCertTol;
};

HolderReport holder_report(const TraceAlgebra& alg, const BlockOperator& a,
                           const BlockOperator& b, double p);

/// (‖ab*‖₁, ‖|a||b|‖₁); the two agree, which reduces everything to moduli.
std::pair<double, double> modulus_reduction_check(const TraceAlgebra& alg, const BlockOperator& a,
                                                  const BlockOperator& b);

CauchySchwarzCertificate cauchy_schwarz_certify(const TraceAlgebra& alg, const BlockOperator& x,
                                                const BlockOperator& y,
                                                double tol = kDefaultCertTol);

TracePositivityCertificate trace_positivity_certify(const TraceAlgebra& alg,
                                                    const BlockOperator& a,
                                                    double tol = kDefaultCertTol);

SwapNormalize swap_normalize(double p);

EqualityCertificate equality_certify(const TraceAlgebra& alg, const BlockOperator& a,
                                     const BlockOperator& b, double p,
                                     double tol = kDefaultCertTol);

/// The unit-q-norm operator b attaining Re τ(ab*) = ‖a‖_p, namely
/// u·|a|^{p−1}/‖a‖_p^{p−1} with a = u|a| the polar decomposition.
BlockOperator dual_witness(const TraceAlgebra& alg, const BlockOperator& a, double p);

ProofChainTrace proof_replay(const TraceAlgebra& alg, const BlockOperator& a,
                             const BlockOperator& b, double p);

/// Boundary case p = 1, q = ∞: equality iff the support projection of |a|
/// commutes with |b| and sits under its top spectral projection.
POneCertificate p_one_boundary_certify(const TraceAlgebra& alg, const BlockOperator& a,
                                       const BlockOperator& b, double tol = kDefaultCertTol);

}  // namespace holdercert
