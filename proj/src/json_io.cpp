#include "holdercert/json_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <utility>

#include "holdercert/error.hpp"
#include "json.hpp"

namespace holdercert {

namespace {

void append_quoted(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void JsonWriter::separate() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (stack_.empty()) return;
  Frame& f = stack_.back();
  if (f.count > 0) out_ += ',';
  out_ += '\n';
  out_.append(2 * stack_.size(), ' ');
  f.count += 1;
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  out_ += '{';
  stack_.push_back({true, 0});
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  Frame f = stack_.back();
  stack_.pop_back();
  if (f.count > 0) {
    out_ += '\n';
    out_.append(2 * stack_.size(), ' ');
  }
  out_ += '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  out_ += '[';
  stack_.push_back({false, 0});
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  Frame f = stack_.back();
  stack_.pop_back();
  if (f.count > 0) {
    out_ += '\n';
    out_.append(2 * stack_.size(), ' ');
  }
  out_ += ']';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
  separate();
  append_quoted(out_, name);
  out_ += ": ";
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::number(double v) {
  separate();
  if (std::isfinite(v)) {
    out_ += format_number(v);
  } else {
    append_quoted(out_, format_number(v));
  }
  return *this;
}

JsonWriter& JsonWriter::integer(std::int64_t v) {
  separate();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::boolean(bool v) {
  separate();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::text(std::string_view v) {
  separate();
  append_quoted(out_, v);
  return *this;
}

JsonWriter& JsonWriter::raw(std::string_view rendered) {
  separate();
  out_ += rendered;
  return *this;
}

namespace {

using Json = nlohmann::json;

[[noreturn]] void bad(const std::string& message) { raise(ErrorCode::BadDocument, message); }

const Json& member(const Json& j, const char* name, const char* where) {
  auto it = j.find(name);
  if (it == j.end()) bad(std::string(where) + " is missing the \"" + name + "\" field");
  return *it;
}

double finite_number(const Json& j, const std::string& where) {
  if (!j.is_number()) bad(where + " must be a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) bad(where + " must be finite");
  return v;
}

Complex complex_entry(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) bad(where + " must be a [re, im] pair");
  return {finite_number(j[0], where + "[0]"), finite_number(j[1], where + "[1]")};
}

ComplexMatrix parse_block(const Json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    bad(where + " must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " array");
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = j[i];
    std::string row_where = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      bad(row_where + " must have " + std::to_string(dim) + " entries");
    for (int c = 0; c < dim; ++c)
      m(i, c) = complex_entry(row[c], row_where + "[" + std::to_string(c) + "]");
  }
  return m;
}

}  // namespace

OperatorDocument parse_operator_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) bad("top level must be an object");

  const Json& jalg = member(j, "algebra", "document");
  if (!jalg.is_object()) bad("\"algebra\" must be an object");
  const Json& jdims = member(jalg, "block_dims", "\"algebra\"");
  const Json& jweights = member(jalg, "weights", "\"algebra\"");
  if (!jdims.is_array()) bad("\"block_dims\" must be an array");
  if (!jweights.is_array()) bad("\"weights\" must be an array");

  std::vector<int> dims;
  for (std::size_t k = 0; k < jdims.size(); ++k) {
    if (!jdims[k].is_number_integer()) bad("\"block_dims\" entries must be integers");
    dims.push_back(jdims[k].get<int>());
  }
  std::vector<double> weights;
  for (std::size_t k = 0; k < jweights.size(); ++k)
    weights.push_back(finite_number(jweights[k], "\"weights\"[" + std::to_string(k) + "]"));

  TraceAlgebra alg(std::move(dims), std::move(weights));

  const Json& jops = member(j, "operators", "document");
  if (!jops.is_object()) bad("\"operators\" must be an object");
  std::map<std::string, BlockOperator> ops;
  for (auto it = jops.begin(); it != jops.end(); ++it) {
    const std::string& name = it.key();
    const Json& jblocks = it.value();
    std::string where = "operator \"" + name + "\"";
    if (!jblocks.is_array() || static_cast<int>(jblocks.size()) != alg.block_count())
      bad(where + " must have one block per algebra summand");
    std::vector<ComplexMatrix> blocks;
    for (int k = 0; k < alg.block_count(); ++k)
      blocks.push_back(parse_block(jblocks[k], alg.block_dims[k],
                                   where + " block " + std::to_string(k)));
    ops.emplace(name, BlockOperator(std::move(blocks)));
  }

  return OperatorDocument{std::move(alg), std::move(ops)};
}

namespace {

std::string render_row(const ComplexMatrix& m, int row) {
  std::string out = "[";
  for (int c = 0; c < m.dim(); ++c) {
    if (c > 0) out += ", ";
    out += "[" + format_number(m(row, c).real()) + ", " + format_number(m(row, c).imag()) + "]";
  }
  out += "]";
  return out;
}

template <typename T, typename F>
std::string render_flat_array(const std::vector<T>& items, F&& render) {
  std::string out = "[";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k > 0) out += ", ";
    out += render(items[k]);
  }
  out += "]";
  return out;
}

}  // namespace

std::string format_operator_document(const OperatorDocument& doc) {
  JsonWriter w;
  w.begin_object();
  w.key("algebra").begin_object();
  w.key("block_dims")
      .raw(render_flat_array(doc.algebra.block_dims,
                             [](int d) { return std::to_string(d); }));
  w.key("weights")
      .raw(render_flat_array(doc.algebra.weights, [](double v) { return format_number(v); }));
  w.end_object();
  w.key("operators").begin_object();
  for (const auto& [name, op] : doc.operators) {
    w.key(name).begin_array();
    for (int k = 0; k < op.block_count(); ++k) {
      w.begin_array();
      for (int i = 0; i < op.block(k).dim(); ++i) w.raw(render_row(op.block(k), i));
      w.end_array();
    }
    w.end_array();
  }
  w.end_object();
  w.end_object();
  return w.str() + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) bad("cannot read file: " + path);
  return text;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) bad("cannot write file: " + path);
  out << text;
  out.flush();
  if (!out) bad("cannot write file: " + path);
}

OperatorDocument read_operator_document(const std::string& path) {
  return parse_operator_document(read_text_file(path));
}

}  // namespace holdercert
