#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "holdercert/tracealg.hpp"

namespace holdercert {

/// Number formatting shared by every JSON emitter here: printf %.17g semantics
/// via std::to_chars, so output is locale-free, byte-deterministic, and doubles
/// survive a parse round trip. Non-finite values come back as the bare tokens
/// "inf", "-inf", "nan"; JsonWriter quotes them since JSON has no such literals.
std::string format_number(double v);

/// Incremental pretty-printer for JSON with fixed key order and two-space
/// indentation. Deliberately tiny: the point is byte-stable output, not a
/// general serializer. raw() splices pre-rendered JSON (used to keep matrix
/// rows on one line).
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& number(double v);
  JsonWriter& integer(std::int64_t v);
  JsonWriter& boolean(bool v);
  JsonWriter& text(std::string_view v);
  JsonWriter& raw(std::string_view rendered);

  const std::string& str() const { return out_; }

 private:
  struct Frame {
    bool object;
    int count;
  };

  void separate();

  std::string out_;
  std::vector<Frame> stack_;
  bool after_key_ = false;
};

/// One input/output file: an algebra signature plus named operators on it.
/// Complex entries are [re, im] pairs; blocks are row-major d x d arrays.
struct OperatorDocument {
  TraceAlgebra algebra;
  std::map<std::string, BlockOperator> operators;
};

/// Parses and validates a document. Structural problems (bad JSON, missing
/// fields, wrong shapes, non-finite numbers) raise BadDocument; an invalid
/// algebra signature raises InvalidAlgebra.
OperatorDocument parse_operator_document(const std::string& text);

/// Renders a document in the canonical layout parse_operator_document reads.
/// Operators appear sorted by name; output ends with a newline.
std::string format_operator_document(const OperatorDocument& doc);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

OperatorDocument read_operator_document(const std::string& path);

}  // namespace holdercert
