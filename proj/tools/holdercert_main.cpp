// Command line front end: reads operator documents, runs norms, Holder
// reports, equality certificates, dual witnesses, chain replays, and the
// p = 1 boundary check, and emits schema-stable JSON on stdout. A short
// human summary goes to stderr so stdout stays byte-deterministic.
//
// Exit codes: 0 success (certify: Equality), 1 certify StrictInequality or
// selftest failure, 2 certify Indeterminate, 64 usage errors (including bad
// exponents and budgets), 65 data errors (unreadable or malformed documents,
// mismatched algebras), 70 numerical failures propagated from the kernel.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holdercert/error.hpp"
#include "holdercert/holdercore.hpp"
#include "holdercert/json_io.hpp"
#include "holdercert/oracle.hpp"
#include "holdercert/rng.hpp"
#include "holdercert/tracealg.hpp"

using namespace holdercert;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadDocument:
    case ErrorCode::InvalidAlgebra:
    case ErrorCode::ShapeMismatch:
      return 65;
    case ErrorCode::BadExponent:
    case ErrorCode::NegativeExponent:
    case ErrorCode::ZeroBudget:
    case ErrorCode::UnknownKind:
      return 64;
    default:
      return 70;
  }
}

void print_json(const JsonWriter& w) { std::cout << w.str() << "\n"; }

void print_error(const std::string& code, const std::string& message) {
  JsonWriter w;
  w.begin_object();
  w.key("code").text(code);
  w.key("message").text(message);
  w.end_object();
  print_json(w);
}

double parse_exponent(const std::string& s, bool allow_inf) {
  if (s == "inf") {
    if (!allow_inf) throw UsageError("--p inf is only supported by `norm`");
    return kInfiniteExponent;
  }
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("--p must be a real number or \"inf\", got: " + s);
  }
  if (pos != s.size() || !std::isfinite(v))
    throw UsageError("--p must be a real number or \"inf\", got: " + s);
  return v;
}

// --tol beats HOLDER_TOL beats the built-in default.
double resolve_tolerance(bool flag_given, double flag_value) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("HOLDER_TOL")) {
    std::string s(env);
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != s.size() || !std::isfinite(v) || v <= 0.0)
      throw UsageError("HOLDER_TOL must be a positive real, got: " + s);
    return v;
  }
  return kDefaultCertTol;
}

const BlockOperator& pick_operator(const OperatorDocument& doc, const std::string& conventional,
                                   const std::string& flag) {
  if (doc.operators.size() == 1) return doc.operators.begin()->second;
  auto it = doc.operators.find(conventional);
  if (it != doc.operators.end()) return it->second;
  raise(ErrorCode::BadDocument, flag + ": file must contain exactly one operator or one named \"" +
                                    conventional + "\"");
}

struct Operands {
  TraceAlgebra alg;
  BlockOperator a;
  BlockOperator b;
};

Operands load_pair(const std::string& a_path, const std::string& b_path) {
  OperatorDocument da = read_operator_document(a_path);
  OperatorDocument db = (b_path == a_path) ? da : read_operator_document(b_path);
  if (!(da.algebra == db.algebra))
    raise(ErrorCode::BadDocument, "operand files disagree on the algebra signature");
  return {da.algebra, pick_operator(da, "a", "--a"), pick_operator(db, "b", "--b")};
}

void emit_report_fields(JsonWriter& w, const HolderReport& r) {
  w.key("p").number(r.p);
  w.key("q").number(r.q);
  w.key("lhs").number(r.lhs);
  w.key("rhs").number(r.rhs);
  w.key("gap").number(r.gap);
  w.key("relative_gap").number(r.relative_gap);
}

int run_norm(const std::string& op_path, const std::string& p_str) {
  OperatorDocument doc = read_operator_document(op_path);
  const BlockOperator& x = pick_operator(doc, "op", "--op");
  double p = parse_exponent(p_str, true);
  double value = pnorm(doc.algebra, x, p);
  JsonWriter w;
  w.begin_object();
  w.key("p").number(p);
  w.key("value").number(value);
  w.end_object();
  print_json(w);
  std::cerr << "norm: " << format_number(value) << "\n";
  return 0;
}

int run_holder(const std::string& a_path, const std::string& b_path, const std::string& p_str) {
  Operands ops = load_pair(a_path, b_path);
  double p = parse_exponent(p_str, false);
  HolderReport rep = holder_report(ops.alg, ops.a, ops.b, p);
  JsonWriter w;
  w.begin_object();
  emit_report_fields(w, rep);
  w.end_object();
  print_json(w);
  std::cerr << "holder: lhs " << format_number(rep.lhs) << " <= rhs " << format_number(rep.rhs)
            << " (gap " << format_number(rep.gap) << ")\n";
  return 0;
}

int run_certify(const std::string& a_path, const std::string& b_path, const std::string& p_str,
                bool tol_given, double tol_flag) {
  Operands ops = load_pair(a_path, b_path);
  double p = parse_exponent(p_str, false);
  double tol = resolve_tolerance(tol_given, tol_flag);
  EqualityCertificate cert = equality_certify(ops.alg, ops.a, ops.b, p, tol);
  JsonWriter w;
  w.begin_object();
  w.key("status").text(equality_status_name(cert.status));
  w.key("deviation").number(cert.deviation);
  w.key("lambda").number(cert.lambda);
  w.key("tolerance").number(cert.tolerance);
  w.key("reason").text(cert.reason);
  w.key("report").begin_object();
  emit_report_fields(w, cert.report);
  w.end_object();
  w.end_object();
  print_json(w);
  std::cerr << "certify: " << equality_status_name(cert.status) << " (deviation "
            << format_number(cert.deviation) << ", tolerance " << format_number(cert.tolerance)
            << ")\n";
  switch (cert.status) {
    case EqualityStatus::Equality:
      return 0;
    case EqualityStatus::StrictInequality:
      return 1;
    case EqualityStatus::Indeterminate:
      return 2;
  }
  return 70;
}

int run_witness(const std::string& a_path, const std::string& p_str, const std::string& out_path) {
  OperatorDocument doc = read_operator_document(a_path);
  const BlockOperator& a = pick_operator(doc, "a", "--a");
  double p = parse_exponent(p_str, false);
  BlockOperator wtn = dual_witness(doc.algebra, a, p);

  OperatorDocument out{doc.algebra, {}};
  out.operators.emplace("w", std::move(wtn));
  std::string text = format_operator_document(out);
  std::cout << text;
  if (!out_path.empty()) write_text_file(out_path, text);
  double q = conjugate_exponent(p);
  std::cerr << "witness: unit dual norm " << format_number(pnorm(doc.algebra, out.operators.at("w"), q))
            << ", attains " << format_number(inner(doc.algebra, a, out.operators.at("w")).real())
            << "\n";
  return 0;
}

int run_replay(const std::string& a_path, const std::string& b_path, const std::string& p_str) {
  Operands ops = load_pair(a_path, b_path);
  double p = parse_exponent(p_str, false);
  ProofChainTrace t = proof_replay(ops.alg, ops.a, ops.b, p);
  JsonWriter w;
  w.begin_object();
  w.key("p").number(t.p);
  w.key("p_eff").number(t.p_eff);
  w.key("swapped").boolean(t.swapped);
  w.key("r").number(t.r);
  w.key("r_prime").number(t.r_prime);
  w.key("s0").number(t.s0);
  w.key("s1").number(t.s1);
  w.key("s2").number(t.s2);
  w.key("s3").number(t.s3);
  w.key("slacks").begin_array();
  for (double s : t.slacks) w.number(s);
  w.end_array();
  w.key("chain_ok").boolean(t.chain_ok);
  w.key("exponent_identity_error").number(t.exponent_identity_error);
  w.end_object();
  print_json(w);
  std::cerr << "replay: chain " << (t.chain_ok ? "ok" : "violated") << ", s0 "
            << format_number(t.s0) << " .. s3 " << format_number(t.s3) << "\n";
  return 0;
}

int run_pone(const std::string& a_path, const std::string& b_path, bool tol_given,
             double tol_flag) {
  Operands ops = load_pair(a_path, b_path);
  double tol = resolve_tolerance(tol_given, tol_flag);
  POneCertificate cert = p_one_boundary_certify(ops.alg, ops.a, ops.b, tol);
  JsonWriter w;
  w.begin_object();
  w.key("equality").boolean(cert.equality);
  w.key("condition").boolean(cert.condition);
  w.key("lhs").number(cert.lhs);
  w.key("rhs").number(cert.rhs);
  w.key("spectral_defect").number(cert.spectral_defect);
  w.key("commutation_defect").number(cert.commutation_defect);
  w.key("tolerance").number(cert.tolerance);
  w.end_object();
  print_json(w);
  std::cerr << "pone: equality " << (cert.equality ? "yes" : "no") << ", condition "
            << (cert.condition ? "yes" : "no") << "\n";
  return 0;
}

int run_selftest(std::uint64_t seeds, int size) {
  long checks = 0;
  long failures = 0;
  std::string first_failure;
  auto check = [&](bool ok, const std::string& what, std::uint64_t trial) {
    ++checks;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) first_failure = what + " at trial " + std::to_string(trial);
    }
  };

  for (std::uint64_t trial = 0; trial < seeds; ++trial) {
    std::uint64_t s = derive_seed(0x5e1f7e57u, trial);
    Xoshiro256pp rng(s);
    int block_count = 1 + static_cast<int>(rng.next() % 2);
    std::vector<int> dims;
    std::vector<double> weights;
    for (int k = 0; k < block_count; ++k) {
      dims.push_back(1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(size)));
      weights.push_back(rng.uniform(0.5, 2.0));
    }
    TraceAlgebra alg(dims, weights);
    double p = rng.uniform(1.05, 8.0);
    double q = conjugate_exponent(p);
    BlockOperator a = random_operator(alg, {derive_seed(s, 1), OperatorKind::Ginibre, 1.0});
    BlockOperator b = random_operator(alg, {derive_seed(s, 2), OperatorKind::Ginibre, 1.0});

    HolderReport rep = holder_report(alg, a, b, p);
    check(rep.gap >= -1e-10 * (1.0 + rep.rhs), "holder bound", trial);

    check(proof_replay(alg, a, b, p).chain_ok, "chain replay", trial);

    if (!a.is_zero()) {
      BlockOperator wtn = dual_witness(alg, a, p);
      double na = pnorm(alg, a, p);
      check(std::abs(pnorm(alg, wtn, q) - 1.0) <= 1e-8, "witness dual norm", trial);
      check(std::abs(inner(alg, a, wtn).real() - na) <= 1e-8 * (1.0 + na), "witness attainment",
            trial);
    }

    double p_eq = rng.uniform(1.2, 8.0);
    auto pair = random_equality_pair(alg, derive_seed(s, 3), 1.0, p_eq);
    EqualityCertificate cert = equality_certify(alg, pair.first, pair.second, p_eq);
    check(cert.status == EqualityStatus::Equality, "equality pair certificate", trial);

    ProofChainTrace tight = proof_replay(alg, pair.first, pair.second, p_eq);
    bool slacks_small = tight.chain_ok;
    for (double slack : tight.slacks) slacks_small = slacks_small && slack <= 1e-8;
    check(slacks_small, "equality pair chain slack", trial);

    BlockOperator pos = random_operator(alg, {derive_seed(s, 4), OperatorKind::Positive, 1.0});
    int k = static_cast<int>(rng.next() % 4);
    double norm_k = std::pow(pos.block(0).frobenius_norm(), k);
    check(integer_power_check(pos.block(0), k) <= 1e-9 * (1.0 + norm_k), "integer power", trial);
  }

  JsonWriter w;
  w.begin_object();
  w.key("seeds").integer(static_cast<std::int64_t>(seeds));
  w.key("size").integer(size);
  w.key("checks").integer(checks);
  w.key("failures").integer(failures);
  w.key("ok").boolean(failures == 0);
  w.key("first_failure").text(first_failure);
  w.end_object();
  print_json(w);
  std::cerr << "selftest: " << checks << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trace p-norm reports and equality certificates on weighted block algebras"};
  app.require_subcommand(1);

  std::string op_path, a_path, b_path, p_str, out_path;
  double tol_flag = kDefaultCertTol;
  std::uint64_t seeds = 40;
  int size = 4;

  CLI::App* norm = app.add_subcommand("norm", "p-norm of one operator (p = inf for operator norm)");
  norm->add_option("--op", op_path, "operator document")->required();
  norm->add_option("--p", p_str, "exponent in [1, inf], \"inf\" allowed")->required();

  CLI::App* holder = app.add_subcommand("holder", "trace Holder report for a pair");
  holder->add_option("--a", a_path, "left operand document")->required();
  holder->add_option("--b", b_path, "right operand document")->required();
  holder->add_option("--p", p_str, "exponent > 1")->required();

  CLI::App* certify = app.add_subcommand("certify", "equality/strictness certificate for a pair");
  certify->add_option("--a", a_path, "left operand document")->required();
  certify->add_option("--b", b_path, "right operand document")->required();
  certify->add_option("--p", p_str, "exponent > 1")->required();
  CLI::Option* certify_tol = certify->add_option("--tol", tol_flag, "certificate tolerance");

  CLI::App* witness = app.add_subcommand("witness", "norming dual operator for one operand");
  witness->add_option("--a", a_path, "operand document")->required();
  witness->add_option("--p", p_str, "exponent > 1")->required();
  witness->add_option("--out", out_path, "also write the witness document to this file");

  CLI::App* replay = app.add_subcommand("replay", "step-by-step inequality chain for a pair");
  replay->add_option("--a", a_path, "left operand document")->required();
  replay->add_option("--b", b_path, "right operand document")->required();
  replay->add_option("--p", p_str, "exponent > 1")->required();

  CLI::App* pone = app.add_subcommand("pone", "boundary certificate at p = 1, q = inf");
  pone->add_option("--a", a_path, "left operand document")->required();
  pone->add_option("--b", b_path, "right operand document")->required();
  CLI::Option* pone_tol = pone->add_option("--tol", tol_flag, "certificate tolerance");

  CLI::App* selftest = app.add_subcommand("selftest", "run the seeded property corpus");
  selftest->add_option("--seeds", seeds, "number of seeded trials");
  selftest->add_option("--size", size, "largest block dimension")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }

  try {
    if (norm->parsed()) return run_norm(op_path, p_str);
    if (holder->parsed()) return run_holder(a_path, b_path, p_str);
    if (certify->parsed())
      return run_certify(a_path, b_path, p_str, certify_tol->count() > 0, tol_flag);
    if (witness->parsed()) return run_witness(a_path, p_str, out_path);
    if (replay->parsed()) return run_replay(a_path, b_path, p_str);
    if (pone->parsed()) return run_pone(a_path, b_path, pone_tol->count() > 0, tol_flag);
    if (selftest->parsed()) return run_selftest(seeds, size);
  } catch (const UsageError& e) {
    print_error("UsageError", e.what());
    return 64;
  } catch (const Error& e) {
    print_error(error_code_name(e.code()), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    print_error("InternalError", e.what());
    return 70;
  }
  return 64;
}
