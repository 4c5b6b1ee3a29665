#include "holdercert/holdercore.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "holdercert/error.hpp"
#include "holdercert/numkernel.hpp"

namespace holdercert {

namespace {

void require_finite_exponent(double p, const char* who) {
  if (!std::isfinite(p) || p <= 1.0) {
    raise(ErrorCode::BadExponent, std::string(who) + ": needs finite p > 1, got " + std::to_string(p));
  }
}

BlockOperator blockwise_isometry(const BlockOperator& a) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(a.block_count());
  for (int k = 0; k < a.block_count(); ++k) blocks.push_back(polar(a.block(k)).isometry_part);
  return BlockOperator(std::move(blocks));
}

/// Support projection of |a|, the p_a of the positive-operand reduction.
BlockOperator support_projection(const BlockOperator& a) { return power(modulus(a), 0.0); }

}  // namespace

const char* equality_status_name(EqualityStatus status) {
  switch (status) {
    case EqualityStatus::Equality:
      return "Equality";
    case EqualityStatus::StrictInequality:
      return "StrictInequality";
    case EqualityStatus::Indeterminate:
      return "Indeterminate";
  }
  return "Indeterminate";
}

HolderReport holder_report(const TraceAlgebra& alg, const BlockOperator& a, const BlockOperator& b,
                           double p) {
  require_finite_exponent(p, "holder_report");
  ensure_conforms(alg, a, "holder_report");
  ensure_conforms(alg, b, "holder_report");

  HolderReport rep;
  rep.p = p;
  rep.q = conjugate_exponent(p);
  rep.lhs = pnorm(alg, a * b.adjoint(), 1.0);
  rep.rhs = pnorm(alg, a, p) * pnorm(alg, b, rep.q);
  rep.gap = rep.rhs - rep.lhs;
  rep.relative_gap = rep.rhs > 0.0 ? rep.gap / rep.rhs : 0.0;
  return rep;
}

std::pair<double, double> modulus_reduction_check(const TraceAlgebra& alg, const BlockOperator& a,
                                                  const BlockOperator& b) {
  ensure_conforms(alg, a, "modulus_reduction_check");
  ensure_conforms(alg, b, "modulus_reduction_check");
  const double direct = pnorm(alg, a * b.adjoint(), 1.0);
  const double reduced = pnorm(alg, modulus(a) * modulus(b), 1.0);
  return {direct, reduced};
}

CauchySchwarzCertificate cauchy_schwarz_certify(const TraceAlgebra& alg, const BlockOperator& x,
                                                const BlockOperator& y, double tol) {
  ensure_conforms(alg, x, "cauchy_schwarz_certify");
  ensure_conforms(alg, y, "cauchy_schwarz_certify");

  CauchySchwarzCertificate cert;
  cert.tolerance = tol;
  const Complex ip = inner(alg, x, y);
  cert.inner_real = ip.real();
  cert.inner_abs = std::abs(ip);
  const double nx = pnorm(alg, x, 2.0);
  const double ny = pnorm(alg, y, 2.0);
  cert.norm_product = nx * ny;

  cert.holds = cert.inner_abs <= cert.norm_product + tol;
  cert.equality = cert.inner_real >= cert.norm_product - tol * (1.0 + cert.norm_product);

  if (cert.equality && ny > 0.0) {
    cert.has_lambda = true;
    cert.lambda = nx / ny;
    BlockOperator diff = x - Complex(cert.lambda) * y;
    cert.residual = pnorm(alg, diff, 2.0);
    // ‖x−λy‖₂² = 2λ(‖x‖₂‖y‖₂ − Re⟨x,y⟩) for λ = ‖x‖₂/‖y‖₂, so near-equality
    // caps the residual at the square root scale.
    cert.residual_bound = std::sqrt(2.0 * cert.lambda * tol * (1.0 + cert.norm_product)) + tol;
  }
  return cert;
}

TracePositivityCertificate trace_positivity_certify(const TraceAlgebra& alg,
                                                    const BlockOperator& a, double tol) {
  ensure_conforms(alg, a, "trace_positivity_certify");

  TracePositivityCertificate cert;
  cert.tolerance = tol;
  cert.trace_abs = std::abs(trace(alg, a));
  cert.trace_modulus = trace(alg, modulus(a)).real();
  cert.holds = cert.trace_abs <= cert.trace_modulus + tol;
  cert.equality = cert.trace_abs >= cert.trace_modulus - tol * (1.0 + cert.trace_modulus);

  cert.positive = true;
  for (int k = 0; k < a.block_count(); ++k) {
    const ComplexMatrix& blk = a.block(k);
    const int n = blk.dim();
    double asym = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) asym = std::max(asym, std::abs(blk(i, j) - std::conj(blk(j, i))));
    if (asym > kHermTol * (1.0 + blk.max_abs_entry())) {
      cert.positive = false;
      break;
    }
    const SpectralDecomp eig = herm_eig(blk);
    double lam_max = 0.0;
    for (double lam : eig.eigenvalues) lam_max = std::max(lam_max, std::abs(lam));
    if (!eig.eigenvalues.empty() && eig.eigenvalues.front() < -kPsdTol * (1.0 + lam_max)) {
      cert.positive = false;
      break;
    }
  }
  return cert;
}

SwapNormalize swap_normalize(double p) {
  require_finite_exponent(p, "swap_normalize");
  if (p <= 2.0) return {p, false};
  return {conjugate_exponent(p), true};
}

EqualityCertificate equality_certify(const TraceAlgebra& alg, const BlockOperator& a,
                                     const BlockOperator& b, double p, double tol) {
  require_finite_exponent(p, "equality_certify");
  ensure_conforms(alg, a, "equality_certify");
  ensure_conforms(alg, b, "equality_certify");

  EqualityCertificate cert;
  cert.tolerance = tol;
  cert.report = holder_report(alg, a, b, p);
  const double q = cert.report.q;
  const double na = pnorm(alg, a, p);
  const double nb = pnorm(alg, b, q);

  if (na == 0.0 || nb == 0.0) {
    cert.status = EqualityStatus::Indeterminate;
    cert.reason = "zero_operand";
    cert.deviation = 0.0;
    cert.lambda = 0.0;
    return cert;
  }

  // Densities of the normalized operands; unit scale keeps the powers tame.
  const BlockOperator da = power(modulus(Complex(1.0 / na) * a), p);
  const BlockOperator db = power(modulus(Complex(1.0 / nb) * b), q);
  cert.deviation = pnorm(alg, da - db, 1.0);
  cert.lambda = std::pow(na, p) / std::pow(nb, q);

  const double rel = cert.report.relative_gap;
  const bool dev_eq = cert.deviation <= tol;
  const bool dev_strict = cert.deviation > kGraceFactor * tol;
  const bool gap_eq = rel <= tol;
  const bool gap_strict = rel > kGraceFactor * tol;

  if (dev_eq && gap_eq) {
    cert.status = EqualityStatus::Equality;
  } else if (dev_strict && gap_strict) {
    cert.status = EqualityStatus::StrictInequality;
  } else if ((dev_eq && gap_strict) || (dev_strict && gap_eq)) {
    // The theorem says these can never point in opposite directions; if the
    // numbers do anyway, refuse to guess.
    cert.status = EqualityStatus::Indeterminate;
    cert.reason = "criteria_disagree";
  } else {
    cert.status = EqualityStatus::Indeterminate;
    cert.reason = "gray_zone";
  }
  return cert;
}

BlockOperator dual_witness(const TraceAlgebra& alg, const BlockOperator& a, double p) {
  require_finite_exponent(p, "dual_witness");
  ensure_conforms(alg, a, "dual_witness");
  const double na = pnorm(alg, a, p);
  if (na <= kRankTol) {
    raise(ErrorCode::ZeroOperator, "dual_witness: operand has no mass to pair against");
  }
  const BlockOperator u = blockwise_isometry(a);
  return u * power(modulus(Complex(1.0 / na) * a), p - 1.0);
}

ProofChainTrace proof_replay(const TraceAlgebra& alg, const BlockOperator& a,
                             const BlockOperator& b, double p) {
  require_finite_exponent(p, "proof_replay");
  ensure_conforms(alg, a, "proof_replay");
  ensure_conforms(alg, b, "proof_replay");

  ProofChainTrace tr;
  tr.p = p;
  const SwapNormalize sn = swap_normalize(p);
  tr.p_eff = sn.p_eff;
  tr.swapped = sn.swapped;
  // ‖ab*‖₁ = ‖ba*‖₁, so for p > 2 the roles flip and the conjugate exponent
  // lands in (1,2] as the proof assumes.
  const BlockOperator& lead = sn.swapped ? b : a;
  const BlockOperator& other = sn.swapped ? a : b;
  const double q_eff = conjugate_exponent(sn.p_eff);
  tr.r = q_eff / 2.0;

  const double nl = pnorm(alg, lead, sn.p_eff);
  const double no = pnorm(alg, other, q_eff);
  if (nl == 0.0 || no == 0.0) {
    raise(ErrorCode::ZeroOperator, "proof_replay: the chain needs both operands nonzero");
  }
  tr.normalized_a = Complex(1.0 / nl) * lead;
  tr.normalized_b = Complex(1.0 / no) * other;

  const BlockOperator ma = modulus(tr.normalized_a);
  const BlockOperator mb = modulus(tr.normalized_b);
  tr.w = blockwise_isometry(ma * mb);

  const double pe = sn.p_eff;
  tr.x = tr.w.adjoint() * power(ma, pe / 2.0);
  tr.y = mb * power(ma, 1.0 - pe / 2.0);

  tr.s0 = inner(alg, tr.x, tr.y).real();
  tr.s1 = pnorm(alg, tr.x, 2.0) * pnorm(alg, tr.y, 2.0);
  const double t2 = trace(alg, mb * mb * power(ma, 2.0 - pe)).real();
  tr.s2 = std::sqrt(std::max(t2, 0.0));

  if (pe == 2.0) {
    // r = 1, r' = ∞: the inner bound degenerates to ‖|a|⁰‖_∞^{1/2} with |a|⁰
    // the support projection, and the exponent identity holds in the limit.
    tr.r_prime = kInfiniteExponent;
    tr.s3 = std::sqrt(opnorm(alg, power(ma, 0.0)));
    tr.exponent_identity_error = 0.0;
  } else {
    tr.r_prime = pe / (2.0 - pe);
    tr.exponent_identity_error = std::abs((2.0 - pe) * tr.r_prime - pe);
    const double t3 = trace(alg, power(ma, (2.0 - pe) * tr.r_prime)).real();
    tr.s3 = std::pow(std::max(t3, 0.0), 1.0 / (2.0 * tr.r_prime));
  }

  tr.slacks = {tr.s1 - tr.s0, tr.s2 - tr.s1, tr.s3 - tr.s2, 1.0 - tr.s3};
  tr.chain_ok = true;
  for (double s : tr.slacks) {
    if (!(s >= -kChainAbsTol)) tr.chain_ok = false;
  }
  return tr;
}

POneCertificate p_one_boundary_certify(const TraceAlgebra& alg, const BlockOperator& a,
                                       const BlockOperator& b, double tol) {
  ensure_conforms(alg, a, "p_one_boundary_certify");
  ensure_conforms(alg, b, "p_one_boundary_certify");

  POneCertificate cert;
  cert.tolerance = tol;
  const double na = pnorm(alg, a, 1.0);
  const double nb = opnorm(alg, b);
  if (na == 0.0 || nb == 0.0) {
    raise(ErrorCode::ZeroOperator, "p_one_boundary_certify: needs both operands nonzero");
  }
  cert.lhs = pnorm(alg, a * b.adjoint(), 1.0);
  cert.rhs = na * nb;
  cert.equality = cert.lhs >= cert.rhs - tol * (1.0 + cert.rhs);

  const BlockOperator pa = support_projection(a);
  const BlockOperator mb = modulus(b);
  const BlockOperator pam = pa * mb;
  cert.spectral_defect = pnorm(alg, pam - Complex(nb) * pa, 1.0);
  cert.commutation_defect = pnorm(alg, pam - mb * pa, 1.0);
  const double scale = tol * (1.0 + nb);
  cert.condition = cert.spectral_defect <= scale && cert.commutation_defect <= scale;
  return cert;
}

}  // namespace holdercert
