// End-to-end tests for the command line tool: golden bytes on canonical
// inputs, exit code contract, witness round trips, and tolerance plumbing.
// The harness passes --cli=<binary> and --golden=<dir>; everything else is
// forwarded to doctest.
#define DOCTEST_CONFIG_IMPLEMENT

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "holdercert/json_io.hpp"
#include "holdercert/oracle.hpp"
#include "holdercert/tracealg.hpp"

using namespace holdercert;

namespace {

std::string g_cli;
std::string g_golden;
int g_run_counter = 0;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string out_file = "cli_out_" + std::to_string(g_run_counter++) + ".tmp";
  std::string cmd = env_prefix + "\"" + g_cli + "\" " + args + " > " + out_file + " 2> /dev/null";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = read_text_file(out_file);
  std::remove(out_file.c_str());
  return r;
}

std::string golden(const std::string& name) { return g_golden + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("golden: operator norm at p = inf") {
  RunResult r = run_cli("norm --op \"" + golden("op_diag31.json") + "\" --p inf");
  CHECK(r.exit_code == 0);
  CHECK(r.out == read_text_file(golden("norm_inf.json")));
}

TEST_CASE("golden: report on orthogonal supports") {
  std::string pair = "\"" + golden("pair_orthogonal.json") + "\"";
  RunResult r = run_cli("holder --a " + pair + " --b " + pair + " --p 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == read_text_file(golden("holder_orthogonal.json")));
}

TEST_CASE("golden: certificate on the matched diagonal pair") {
  std::string pair = "\"" + golden("pair_equality.json") + "\"";
  RunResult r = run_cli("certify --a " + pair + " --b " + pair + " --p 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == read_text_file(golden("certify_equality.json")));
}

TEST_CASE("output is byte deterministic") {
  std::string pair = "\"" + golden("pair_equality.json") + "\"";
  RunResult r1 = run_cli("certify --a " + pair + " --b " + pair + " --p 1.7");
  RunResult r2 = run_cli("certify --a " + pair + " --b " + pair + " --p 1.7");
  CHECK(r1.out == r2.out);
  CHECK(r1.exit_code == r2.exit_code);
}

TEST_CASE("witness round trips through certify") {
  TraceAlgebra alg({2, 2}, {1.0, 0.5});
  for (std::uint64_t seed : {7u, 8u, 9u}) {
    OperatorDocument doc{alg, {}};
    doc.operators.emplace("a", random_operator(alg, {seed, OperatorKind::Ginibre, 1.0}));
    std::string a_file = "cli_rt_a_" + std::to_string(seed) + ".json";
    std::string w_file = "cli_rt_w_" + std::to_string(seed) + ".json";
    write_text_file(a_file, format_operator_document(doc));

    RunResult w = run_cli("witness --a " + a_file + " --p 2.6 --out " + w_file);
    CHECK(w.exit_code == 0);
    CHECK(w.out == read_text_file(w_file));

    RunResult c = run_cli("certify --a " + a_file + " --b " + w_file + " --p 2.6");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.out, "\"status\": \"Equality\""));

    std::remove(a_file.c_str());
    std::remove(w_file.c_str());
  }
}

TEST_CASE("certify exit codes follow the trichotomy") {
  TraceAlgebra alg({3}, {1.0});
  OperatorDocument doc{alg, {}};
  doc.operators.emplace("a", random_operator(alg, {31, OperatorKind::Ginibre, 1.0}));
  doc.operators.emplace("b", random_operator(alg, {32, OperatorKind::Ginibre, 1.0}));
  write_text_file("cli_generic.json", format_operator_document(doc));
  RunResult strict = run_cli("certify --a cli_generic.json --b cli_generic.json --p 2.2");
  CHECK(strict.exit_code == 1);
  CHECK(contains(strict.out, "\"status\": \"StrictInequality\""));
  std::remove("cli_generic.json");

  OperatorDocument zero_doc{alg, {}};
  zero_doc.operators.emplace("a", BlockOperator::zero(alg));
  zero_doc.operators.emplace("b", random_operator(alg, {33, OperatorKind::Ginibre, 1.0}));
  write_text_file("cli_zero.json", format_operator_document(zero_doc));
  RunResult ind = run_cli("certify --a cli_zero.json --b cli_zero.json --p 2");
  CHECK(ind.exit_code == 2);
  CHECK(contains(ind.out, "\"status\": \"Indeterminate\""));
  CHECK(contains(ind.out, "\"reason\": \"zero_operand\""));
  std::remove("cli_zero.json");
}

TEST_CASE("usage and data problems use the reserved exit codes") {
  CHECK(run_cli("").exit_code == 64);
  CHECK(run_cli("bogus").exit_code == 64);
  CHECK(run_cli("norm --op \"" + golden("op_diag31.json") + "\"").exit_code == 64);

  RunResult bad_p =
      run_cli("holder --a \"" + golden("pair_equality.json") + "\" --b \"" +
              golden("pair_equality.json") + "\" --p 0.5");
  CHECK(bad_p.exit_code == 64);
  CHECK(contains(bad_p.out, "\"code\": \"BadExponent\""));

  CHECK(run_cli("norm --op no_such_file.json --p 2").exit_code == 65);

  write_text_file("cli_bad.json", "this is not json\n");
  RunResult bad = run_cli("norm --op cli_bad.json --p 2");
  CHECK(bad.exit_code == 65);
  CHECK(contains(bad.out, "\"code\": \"BadDocument\""));
  std::remove("cli_bad.json");

  TraceAlgebra alg({2}, {1.0});
  OperatorDocument zdoc{alg, {}};
  zdoc.operators.emplace("a", BlockOperator::zero(alg));
  write_text_file("cli_zero_a.json", format_operator_document(zdoc));
  RunResult zw = run_cli("witness --a cli_zero_a.json --p 2");
  CHECK(zw.exit_code == 70);
  CHECK(contains(zw.out, "\"code\": \"ZeroOperator\""));
  std::remove("cli_zero_a.json");
}

TEST_CASE("tolerance resolution: flag beats environment beats default") {
  TraceAlgebra alg({2}, {1.0});
  OperatorDocument doc{alg, {}};
  doc.operators.emplace(
      "a", BlockOperator({ComplexMatrix::diagonal({Complex(2.0), Complex(1.0)})}));
  doc.operators.emplace(
      "b", BlockOperator({ComplexMatrix::diagonal({Complex(4.1), Complex(1.0)})}));
  write_text_file("cli_near.json", format_operator_document(doc));
  std::string args = "certify --a cli_near.json --b cli_near.json --p 3";

  CHECK(run_cli(args).exit_code == 1);
  RunResult loose = run_cli(args, "HOLDER_TOL=0.05 ");
  CHECK(loose.exit_code == 0);
  CHECK(contains(loose.out, "\"tolerance\": 0.05"));
  CHECK(run_cli(args + " --tol 1e-8", "HOLDER_TOL=0.05 ").exit_code == 1);

  RunResult bad_env = run_cli(args, "HOLDER_TOL=abc ");
  CHECK(bad_env.exit_code == 64);
  CHECK(contains(bad_env.out, "\"code\": \"UsageError\""));
  std::remove("cli_near.json");
}

TEST_CASE("replay and pone and selftest run end to end") {
  std::string pair = "\"" + golden("pair_equality.json") + "\"";
  RunResult rep = run_cli("replay --a " + pair + " --b " + pair + " --p 3");
  CHECK(rep.exit_code == 0);
  CHECK(contains(rep.out, "\"chain_ok\": true"));
  CHECK(contains(rep.out, "\"swapped\": true"));

  TraceAlgebra alg({2}, {1.0});
  OperatorDocument doc{alg, {}};
  doc.operators.emplace(
      "a", BlockOperator({ComplexMatrix::diagonal({Complex(1.0), Complex(0.0)})}));
  doc.operators.emplace(
      "b", BlockOperator({ComplexMatrix::diagonal({Complex(3.0), Complex(1.0)})}));
  write_text_file("cli_pone.json", format_operator_document(doc));
  RunResult po = run_cli("pone --a cli_pone.json --b cli_pone.json");
  CHECK(po.exit_code == 0);
  CHECK(contains(po.out, "\"equality\": true"));
  CHECK(contains(po.out, "\"condition\": true"));
  std::remove("cli_pone.json");

  RunResult st = run_cli("selftest --seeds 5 --size 3");
  CHECK(st.exit_code == 0);
  CHECK(contains(st.out, "\"ok\": true"));
}

int run_all(int argc, char** argv) {
  doctest::Context ctx;
  std::vector<char*> forwarded;
  for (int i = 0; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.rfind("--cli=", 0) == 0) {
      g_cli = arg.substr(6);
    } else if (arg.rfind("--golden=", 0) == 0) {
      g_golden = arg.substr(9);
    } else {
      forwarded.push_back(argv[i]);
    }
  }
  ctx.applyCommandLine(static_cast<int>(forwarded.size()), forwarded.data());
  if (g_cli.empty() || g_golden.empty()) {
    std::fprintf(stderr, "usage: test_cli --cli=<binary> --golden=<dir>\n");
    return 64;
  }
  return ctx.run();
}

int main(int argc, char** argv) { return run_all(argc, argv); }
