#include "leibniz/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "leibniz/error.hpp"

namespace leib::io {

namespace {

using json = nlohmann::ordered_json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    const auto colon = what.find("syntax error");
    if (colon != std::string::npos) what = what.substr(colon);
    throw ParseError(line_col(text, at) + ": " + what);
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing \"" + key + "\"");
  return *it;
}

std::uint64_t unsigned_field(const json& v, const std::string& path) {
  if (!v.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

FieldDesc parse_field(const json& f, const std::string& path) {
  const json& kind = member(f, "kind", path);
  if (!kind.is_string()) fail(path + "/kind", "expected \"Q\" or \"Fp\"");
  const auto k = kind.get<std::string>();
  if (k == "Q") return FieldDesc::rationals();
  if (k != "Fp") fail(path + "/kind", "unknown field kind \"" + k + "\"");
  const std::uint64_t p = unsigned_field(member(f, "p", path), path + "/p");
  try {
    return FieldDesc::prime(p);
  } catch (const InvalidField& e) {
    throw InvalidField(path + "/p: " + e.what());
  }
}

Scalar parse_coeff(const json& v, const FieldDesc& F, const std::string& path) {
  if (!v.is_string()) fail(path, "coefficients are strings");
  try {
    return Scalar::parse(F, v.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

std::size_t parse_index(const json& v, std::size_t n, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer index");
  const auto i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > n) {
    fail(path, "index " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
  }
  return static_cast<std::size_t>(i - 1);
}

json field_json(const FieldDesc& F) {
  json f;
  if (F.is_finite()) {
    f["kind"] = "Fp";
    f["p"] = F.p();
  } else {
    f["kind"] = "Q";
  }
  return f;
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("/", "expected an object");
  const FieldDesc F = parse_field(member(doc, "field", ""), "/field");
  const std::uint64_t n = unsigned_field(member(doc, "dim", ""), "/dim");
  if (n > 4096) fail("/dim", "dimension too large");
  Algebra L(F, n);
  if (const auto it = doc.find("labels"); it != doc.end()) {
    if (!it->is_array() || it->size() != n) fail("/labels", "expected " + std::to_string(n) + " strings");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*it)[i].is_string()) fail("/labels/" + std::to_string(i), "expected a string");
      labels.push_back((*it)[i].get<std::string>());
    }
    L.set_labels(std::move(labels));
  }
  const json& brackets = member(doc, "brackets", "");
  if (!brackets.is_array()) fail("/brackets", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string path = "/brackets/" + std::to_string(b);
    const json& entry = brackets[b];
    const std::size_t i = parse_index(member(entry, "left", path), n, path + "/left");
    const std::size_t j = parse_index(member(entry, "right", path), n, path + "/right");
    if (!seen.insert({i, j}).second) {
      fail(path, "bracket [" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] listed twice");
    }
    const json& value = member(entry, "value", path);
    if (!value.is_array()) fail(path + "/value", "expected an array");
    std::set<std::size_t> idx;
    for (std::size_t t = 0; t < value.size(); ++t) {
      const std::string vp = path + "/value/" + std::to_string(t);
      const std::size_t k = parse_index(member(value[t], "index", vp), n, vp + "/index");
      if (!idx.insert(k).second) fail(vp, "index " + std::to_string(k + 1) + " listed twice");
      L.set(i, j, k, parse_coeff(member(value[t], "coeff", vp), F, vp + "/coeff"));
    }
  }
  return L;
}

std::string emit_algebra(const Algebra& L) {
  const std::size_t n = L.dim();
  std::vector<std::string> lines;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::string value;
      for (std::size_t k = 0; k < n; ++k) {
        if (L.c(i, j, k).is_zero()) continue;
        value += (value.empty() ? "" : ", ") + std::string("{\"index\": ") + std::to_string(k + 1) +
                 ", \"coeff\": " + json(L.c(i, j, k).to_string()).dump() + "}";
      }
      if (value.empty()) continue;
      lines.push_back("{\"left\": " + std::to_string(i + 1) + ", \"right\": " + std::to_string(j + 1) +
                      ", \"value\": [" + value + "]}");
    }
  }
  std::ostringstream os;
  const json f = field_json(L.field());
  os << "{\n  \"field\": {\"kind\": " << f["kind"].dump();
  if (L.field().is_finite()) os << ", \"p\": " << L.field().p();
  os << "},\n  \"dim\": " << n << ",\n";
  if (!L.labels().empty()) {
    os << "  \"labels\": [";
    for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << json(L.labels()[i]).dump();
    os << "],\n";
  }
  os << "  \"brackets\": [";
  for (std::size_t t = 0; t < lines.size(); ++t) os << (t ? ",\n    " : "\n    ") << lines[t];
  os << (lines.empty() ? "]\n}\n" : "\n  ]\n}\n");
  return os.str();
}

Matrix parse_map(std::string_view text, const FieldDesc& field) {
  const json doc = parse_json(text);
  const json& rows = member(doc, "matrix", "");
  if (!rows.is_array() || rows.empty()) fail("/matrix", "expected a non-empty array of rows");
  const std::size_t r = rows.size();
  const std::size_t c = rows[0].is_array() ? rows[0].size() : 0;
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < r; ++i) {
    const std::string path = "/matrix/" + std::to_string(i);
    if (!rows[i].is_array() || rows[i].size() != c || c == 0) {
      fail(path, "expected a row of " + std::to_string(c) + " entries");
    }
    for (std::size_t j = 0; j < c; ++j) {
      entries.push_back(parse_coeff(rows[i][j], field, path + "/" + std::to_string(j)));
    }
  }
  return Matrix(field, r, c, std::move(entries));
}

std::string emit_map(const Matrix& f) {
  std::ostringstream os;
  os << "{\n  \"matrix\": [";
  for (std::size_t i = 0; i < f.rows(); ++i) {
    os << (i ? ",\n    [" : "\n    [");
    for (std::size_t j = 0; j < f.cols(); ++j) os << (j ? ", " : "") << json(f.at(i, j).to_string()).dump();
    os << "]";
  }
  os << "\n  ]\n}\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

Algebra load_algebra(const std::string& path) {
  try {
    return parse_algebra(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const InvalidField& e) {
    throw InvalidField(path + ": " + e.what());
  }
}

Matrix load_map(const std::string& path, const FieldDesc& field) {
  try {
    return parse_map(read_file(path), field);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace leib::io
