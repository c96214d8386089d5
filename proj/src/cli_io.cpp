#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

#include "biframe/cli.hpp"
#include "detail/json_codec.hpp"

namespace biframe::cli {

namespace detail {

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::size_t line_of(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

double read_number(const Json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    errno = 0;
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (!s.empty() && end == s.c_str() + s.size() && errno == 0) return x;
  }
  throw ParseError(where + ": expected a number, got " + v.dump());
}

Scalar read_scalar(const Json& v, Field field, const std::string& where) {
  if (field == Field::Real) return read_number(v, where);
  if (v.is_array() && v.size() == 2) return {read_number(v[0], where), read_number(v[1], where)};
  throw ParseError(where + ": expected a [re, im] pair, got " + v.dump());
}

Vector read_vector(const Json& v, Field field, const std::string& where) {
  if (!v.is_array() || v.empty()) throw ParseError(where + ": expected a nonempty array");
  ComplexColumn c(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) c(static_cast<Index>(i)) = read_scalar(v[i], field, where);
  return Vector(field, std::move(c));
}

Operator read_operator(const Json& v, Field field, const std::string& where) {
  if (!v.is_array() || v.empty()) throw ParseError(where + ": expected a list of rows");
  const auto n = static_cast<Index>(v.size());
  ComplexMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      std::ostringstream os;
      os << where << ": row " << i << " must have " << n << " entries";
      throw Error(ErrorKind::DimensionMismatch, os.str());
    }
    for (Index j = 0; j < n; ++j) m(i, j) = read_scalar(row[static_cast<std::size_t>(j)], field, where);
  }
  return Operator(field, std::move(m));
}

Json encode_number(double x, bool hex) {
  if (!hex) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", x);
  return std::string(buf);
}

namespace {

Json encode_scalar(Scalar z, Field field, bool hex) {
  if (field == Field::Real) return encode_number(z.real(), hex);
  return Json::array({encode_number(z.real(), hex), encode_number(z.imag(), hex)});
}

}  // namespace

Json encode(const Vector& v, bool hex) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(encode_scalar(v[i], v.field(), hex));
  return out;
}

Json encode(const Operator& m, bool hex) {
  Json out = Json::array();
  for (Index i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.dim(); ++j) row.push_back(encode_scalar(m(i, j), m.field(), hex));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace detail

namespace {

using detail::Json;

// Byte offsets inside the raw text, for messages that point at a line.

std::size_t skip_string(const std::string& t, std::size_t i) {
  for (++i; i < t.size(); ++i) {
    if (t[i] == '\\') {
      ++i;
    } else if (t[i] == '"') {
      return i + 1;
    }
  }
  return t.size();
}

/// Offset of the `occurrence`-th key "name" (0-based) after the "families" key.
std::size_t family_key_offset(const std::string& t, const std::string& name, int occurrence = 0) {
  const std::size_t start = t.find("\"families\"");
  if (start == std::string::npos) return 0;
  const std::string quoted = "\"" + name + "\"";
  std::size_t pos = start + 10;
  for (int seen = 0;; ++seen) {
    pos = t.find(quoted, pos);
    if (pos == std::string::npos) return start;
    if (seen == occurrence) return pos;
    pos += quoted.size();
  }
}

/// Offset of element k of the array that follows the key at `key_offset`.
std::size_t element_offset(const std::string& t, std::size_t key_offset, std::size_t k) {
  std::size_t i = t.find('[', key_offset);
  if (i == std::string::npos) return key_offset;
  int depth = 0;
  std::size_t index = 0;
  bool at_element_start = true;
  for (; i < t.size(); ++i) {
    const char c = t[i];
    if (c == '"') {
      if (at_element_start && depth == 1 && index == k) return i;
      at_element_start = false;
      i = skip_string(t, i) - 1;
      continue;
    }
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
    if (depth == 1 && at_element_start && c != ']' && index == k) return i;
    if (c == '[' || c == '{') {
      ++depth;
      if (depth > 1) at_element_start = false;
    } else if (c == ']' || c == '}') {
      if (--depth == 0) break;
    } else if (c == ',' && depth == 1) {
      ++index;
      at_element_start = true;
      continue;
    } else {
      at_element_start = false;
    }
  }
  return key_offset;
}

std::string at_line(const std::string& text, std::size_t offset) {
  return "line " + std::to_string(detail::line_of(text, offset));
}

}  // namespace

const VectorFamily& FamilyFile::family(const std::string& name) const {
  for (const auto& [n, f] : families) {
    if (n == name) return f;
  }
  throw Error(ErrorKind::InvalidArgument, "no family named '" + name + "' in the input file");
}

FamilyFile parse_family_file(const std::string& text) {
  std::set<std::string> seen;
  std::string outer_key;
  std::string duplicate;
  Json::parser_callback_t track = [&](int depth, nlohmann::detail::parse_event_t event, Json& parsed) {
    if (event == nlohmann::detail::parse_event_t::key) {
      if (depth == 1) outer_key = parsed.get<std::string>();
      if (depth == 2 && outer_key == "families" && !seen.insert(parsed.get<std::string>()).second &&
          duplicate.empty()) {
        duplicate = parsed.get<std::string>();
      }
    }
    return true;
  };
  Json doc;
  try {
    doc = Json::parse(text, track);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("family file: ") + e.what());
  }
  if (!duplicate.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                at_line(text, family_key_offset(text, duplicate, 1)) + ": duplicate family name '" + duplicate + "'");
  }
  if (!doc.is_object()) throw ParseError("family file: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "field" && key != "dim" && key != "families" && key != "metadata") {
      throw ParseError("family file: unknown key '" + key + "'");
    }
  }

  FamilyFile out;
  const auto field = doc.find("field");
  if (field == doc.end() || !field->is_string()) throw ParseError("family file: \"field\" must be \"real\" or \"complex\"");
  if (*field == "real") {
    out.field = Field::Real;
  } else if (*field == "complex") {
    out.field = Field::Complex;
  } else {
    throw ParseError("family file: \"field\" must be \"real\" or \"complex\", got " + field->dump());
  }
  const auto dim = doc.find("dim");
  if (dim == doc.end() || !dim->is_number_integer() || dim->get<long long>() < 1) {
    throw ParseError("family file: \"dim\" must be a positive integer");
  }
  out.dim = dim->get<Index>();

  if (const auto meta = doc.find("metadata"); meta != doc.end()) {
    if (!meta->is_object()) throw ParseError("family file: \"metadata\" must be an object");
    if (const auto t = meta->find("truncation"); t != meta->end()) {
      if (!t->is_number_integer()) throw ParseError("family file: metadata.truncation must be an integer");
      out.truncation = t->get<Index>();
    }
    if (const auto s = meta->find("source"); s != meta->end()) {
      if (!s->is_string()) throw ParseError("family file: metadata.source must be a string");
      out.source = s->get<std::string>();
    }
  }

  const auto families = doc.find("families");
  if (families == doc.end() || !families->is_object()) throw ParseError("family file: \"families\" must be an object");
  for (const auto& [name, vectors] : families->items()) {
    const std::size_t key_at = family_key_offset(text, name);
    if (!vectors.is_array()) throw ParseError(at_line(text, key_at) + ": family '" + name + "' must be a list");
    if (vectors.empty()) {
      throw Error(ErrorKind::InvalidArgument, at_line(text, key_at) + ": family '" + name + "' is empty");
    }
    std::vector<Vector> list;
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      const std::string where = at_line(text, element_offset(text, key_at, k));
      Vector v = detail::read_vector(vectors[k], out.field, where + ": family '" + name + "' vector " + std::to_string(k));
      if (v.size() != out.dim) {
        std::ostringstream os;
        os << where << ": family '" << name << "' vector " << k << " has length " << v.size() << ", expected dim "
           << out.dim;
        throw Error(ErrorKind::DimensionMismatch, os.str());
      }
      list.push_back(std::move(v));
    }
    out.families.emplace_back(name, VectorFamily(std::move(list)));
  }
  return out;
}

std::string write_family_file(const FamilyFile& file, bool hex_floats) {
  std::ostringstream os;
  os << "{\n  \"field\": " << Json(std::string(file.field == Field::Real ? "real" : "complex")).dump()
     << ",\n  \"dim\": " << file.dim << ",\n";
  if (file.truncation || file.source) {
    Json meta = Json::object();
    if (file.truncation) meta["truncation"] = *file.truncation;
    if (file.source) meta["source"] = *file.source;
    os << "  \"metadata\": " << meta.dump() << ",\n";
  }
  os << "  \"families\": {";
  for (std::size_t i = 0; i < file.families.size(); ++i) {
    const auto& [name, family] = file.families[i];
    os << (i ? ",\n" : "\n") << "    " << Json(name).dump() << ": [";
    for (std::size_t k = 0; k < family.size(); ++k) {
      os << (k ? ",\n" : "\n") << "      " << detail::encode(family[k], hex_floats).dump();
    }
    os << "\n    ]";
  }
  os << "\n  }\n}\n";
  return os.str();
}

}  // namespace biframe::cli
