#include <string>

#include "doctest.h"
#include "holdercert/error.hpp"
#include "holdercert/json_io.hpp"
#include "holdercert/oracle.hpp"
#include "test_support.hpp"

using namespace holdercert;
using testsupport::mat;

namespace {

void check_code(const std::string& text, ErrorCode expected) {
  try {
    parse_operator_document(text);
    FAIL("expected a parse failure for: ", text);
  } catch (const Error& e) {
    CHECK(e.code() == expected);
  }
}

}  // namespace

TEST_CASE("number formatting is stable and round-trip exact") {
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(-2.25) == "-2.25");
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_number(1e300)) == 1e300);
  double third = 1.0 / 3.0;
  CHECK(std::stod(format_number(third)) == third);
}

TEST_CASE("writer emits the pinned layout") {
  JsonWriter w;
  w.begin_object();
  w.key("x").number(0.5);
  w.key("list").begin_array();
  w.integer(1).integer(2);
  w.end_array();
  w.key("flag").boolean(true);
  w.key("name").text("a\"b");
  w.key("empty").begin_object();
  w.end_object();
  w.end_object();
  CHECK(w.str() ==
        "{\n"
        "  \"x\": 0.5,\n"
        "  \"list\": [\n"
        "    1,\n"
        "    2\n"
        "  ],\n"
        "  \"flag\": true,\n"
        "  \"name\": \"a\\\"b\",\n"
        "  \"empty\": {}\n"
        "}");
}

TEST_CASE("writer quotes non-finite numbers") {
  JsonWriter w;
  w.begin_object();
  w.key("r").number(kInfiniteExponent);
  w.end_object();
  CHECK(w.str() == "{\n  \"r\": \"inf\"\n}");
}

TEST_CASE("document formatting matches the documented layout") {
  TraceAlgebra alg({2}, {1.0});
  OperatorDocument doc{alg, {}};
  doc.operators.emplace("a", BlockOperator({mat({{1, 2}, {0, 1}})}));
  CHECK(format_operator_document(doc) ==
        "{\n"
        "  \"algebra\": {\n"
        "    \"block_dims\": [2],\n"
        "    \"weights\": [1]\n"
        "  },\n"
        "  \"operators\": {\n"
        "    \"a\": [\n"
        "      [\n"
        "        [[1, 0], [2, 0]],\n"
        "        [[0, 0], [1, 0]]\n"
        "      ]\n"
        "    ]\n"
        "  }\n"
        "}\n");
}

TEST_CASE("parse reads what format writes, bit for bit") {
  TraceAlgebra alg({3, 2}, {0.25, 1.75});
  OperatorDocument doc{alg, {}};
  doc.operators.emplace("a", random_operator(alg, {41, OperatorKind::Ginibre, 1.0}));
  doc.operators.emplace("h", random_operator(alg, {42, OperatorKind::Hermitian, 0.3}));

  std::string text = format_operator_document(doc);
  OperatorDocument back = parse_operator_document(text);

  CHECK(back.algebra == doc.algebra);
  REQUIRE(back.operators.size() == 2);
  for (const auto& [name, op] : doc.operators) {
    const BlockOperator& got = back.operators.at(name);
    for (int k = 0; k < op.block_count(); ++k)
      for (int i = 0; i < op.block(k).dim(); ++i)
        for (int j = 0; j < op.block(k).dim(); ++j) CHECK(got.block(k)(i, j) == op.block(k)(i, j));
  }

  CHECK(format_operator_document(back) == text);
}

TEST_CASE("parse accepts a hand-written document") {
  std::string text = R"({
    "algebra": {"block_dims": [1, 2], "weights": [2, 0.5]},
    "operators": {
      "b": [[[[3, 0]]], [[[0, 1], [0, 0]], [[0, 0], [1, -1]]]]
    }
  })";
  OperatorDocument doc = parse_operator_document(text);
  CHECK(doc.algebra.block_dims == std::vector<int>{1, 2});
  CHECK(doc.algebra.weights == std::vector<double>{2.0, 0.5});
  const BlockOperator& b = doc.operators.at("b");
  CHECK(b.block(0)(0, 0) == Complex(3.0, 0.0));
  CHECK(b.block(1)(0, 0) == Complex(0.0, 1.0));
  CHECK(b.block(1)(1, 1) == Complex(1.0, -1.0));
}

TEST_CASE("operators render sorted by name") {
  TraceAlgebra alg({1}, {1.0});
  OperatorDocument doc{alg, {}};
  doc.operators.emplace("z", BlockOperator({mat({{1}})}));
  doc.operators.emplace("a", BlockOperator({mat({{2}})}));
  std::string text = format_operator_document(doc);
  CHECK(text.find("\"a\"") < text.find("\"z\""));
}

TEST_CASE("structural problems raise document errors") {
  check_code("not json", ErrorCode::BadDocument);
  check_code("[]", ErrorCode::BadDocument);
  check_code(R"({"operators": {}})", ErrorCode::BadDocument);
  check_code(R"({"algebra": {"block_dims": [2]}, "operators": {}})", ErrorCode::BadDocument);
  check_code(R"({"algebra": {"block_dims": [2.5], "weights": [1]}, "operators": {}})",
             ErrorCode::BadDocument);
  check_code(R"({"algebra": {"block_dims": [1], "weights": [1]}})", ErrorCode::BadDocument);
  // wrong block count
  check_code(R"({"algebra": {"block_dims": [1, 1], "weights": [1, 1]},
                 "operators": {"a": [[[[1, 0]]]]}})",
             ErrorCode::BadDocument);
  // wrong row length
  check_code(R"({"algebra": {"block_dims": [2], "weights": [1]},
                 "operators": {"a": [[[[1, 0]], [[0, 0], [1, 0]]]]}})",
             ErrorCode::BadDocument);
  // entry is not a pair
  check_code(R"({"algebra": {"block_dims": [1], "weights": [1]},
                 "operators": {"a": [[[3]]]}})",
             ErrorCode::BadDocument);
  // number overflows double range
  check_code(R"({"algebra": {"block_dims": [1], "weights": [1]},
                 "operators": {"a": [[[[1e999, 0]]]]}})",
             ErrorCode::BadDocument);
}

TEST_CASE("algebra validation still applies to parsed documents") {
  check_code(R"({"algebra": {"block_dims": [2], "weights": [-1]}, "operators": {}})",
             ErrorCode::InvalidAlgebra);
  check_code(R"({"algebra": {"block_dims": [0], "weights": [1]}, "operators": {}})",
             ErrorCode::InvalidAlgebra);
  check_code(R"({"algebra": {"block_dims": [1], "weights": [1, 2]}, "operators": {}})",
             ErrorCode::InvalidAlgebra);
}

TEST_CASE("file helpers round trip and report missing files") {
  std::string path = "test_json_io_roundtrip.json";
  TraceAlgebra alg({2}, {1.0});
  OperatorDocument doc{alg, {}};
  doc.operators.emplace("a", BlockOperator({mat({{0, 2}, {0, 0}})}));
  write_text_file(path, format_operator_document(doc));
  OperatorDocument back = read_operator_document(path);
  CHECK(back.operators.count("a") == 1);
  std::remove(path.c_str());

  CHECK_THROWS_AS(read_operator_document("no_such_file_here.json"), Error);
}
