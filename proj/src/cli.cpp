#include "biframe/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "biframe/briesz.hpp"
#include "biframe/fixtures.hpp"
#include "detail/json_codec.hpp"

namespace biframe::cli {

int exit_code(Classification c) {
  switch (c) {
    case Classification::Biframe: return kSuccess;
    case Classification::PairFrameOnly: return kPairFrameOnly;
    case Classification::Neither: return kNeither;
  }
  return kNumericalFailure;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotABiframe: return kNeither;
    case ErrorKind::Singular: return kNumericalFailure;
    default: return kValidationFailure;
  }
}

namespace {

using detail::encode;
using detail::encode_number;
using detail::Json;

struct Globals {
  std::string input;
  std::string output;
  std::string format = "text";
  std::uint64_t seed = 0;
  Tolerances tol;
};

struct Emission {
  std::string body;
  int code;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << body)) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
}

FamilyFile load_input(const Globals& g) {
  if (g.input.empty()) throw Error(ErrorKind::InvalidArgument, "--input is required for this command");
  return parse_family_file(read_file(g.input));
}

Json tolerances_json(const Tolerances& tol) {
  return Json{{"herm", tol.herm}, {"pd", tol.pd}, {"inv", tol.inv}, {"recon", tol.recon}};
}

Json header(const std::string& command, const Globals& g) {
  Json j;
  j["command"] = command;
  j["tolerances"] = tolerances_json(g.tol);
  return j;
}

void add_analysis(Json& j, const BiframeReport& r) {
  j["classification"] = std::string(to_string(r.classification));
  if (r.bounds) {
    j["bounds"] = Json{{"lower", r.bounds->lower}, {"upper", r.bounds->upper}, {"optimal", r.bounds->optimal}};
  } else {
    j["bounds"] = nullptr;
  }
  j["spectrum"] = r.spectrum;
  j["hermitian_deviation"] = r.hermitian_deviation;
  j["witness"] = r.witness ? encode(*r.witness) : Json(nullptr);
  j["residuals"] = nullptr;
  j["operator"] = encode(r.op);
  j["smallest_singular_value"] = r.smallest_singular_value;
  j["zero_band"] = r.band;
}

// Text form: one "key: value" line per scalar, nested blocks indented.

bool is_flat(const Json& v) {
  return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string scalar_text(const Json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string flat_text(const Json& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + (v[i].is_array() ? v[i].dump() : scalar_text(v[i]));
  return s + "]";
}

void render_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      os << pad << key << ":\n";
      render_text(os, v, indent + 2);
    } else if (v.is_array() && !is_flat(v)) {
      os << pad << key << ":\n";
      for (const Json& row : v) {
        if (row.is_object()) {
          render_text(os, row, indent + 2);
          os << '\n';
        } else {
          os << pad << "  " << flat_text(row) << '\n';
        }
      }
    } else if (v.is_array()) {
      os << pad << key << ": " << flat_text(v) << '\n';
    } else {
      os << pad << key << ": " << scalar_text(v) << '\n';
    }
  }
}

std::string render(const Json& j, const Globals& g) {
  if (g.format == "json") return j.dump(2) + "\n";
  if (g.format == "csv") throw Error(ErrorKind::InvalidArgument, "--format csv is only available for spectrum");
  std::ostringstream os;
  render_text(os, j, 0);
  return os.str();
}

std::pair<VectorFamily, VectorFamily> named_pair(const FamilyFile& file, const std::vector<std::string>& names) {
  return {file.family(names.at(0)), file.family(names.at(1))};
}

Json sampled_form(const Operator& s, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const Index n = s.dim();
  double lo = INFINITY, hi = -INFINITY;
  for (std::size_t t = 0; t < samples; ++t) {
    ComplexColumn x(n);
    for (Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      x(i) = s.field() == Field::Real ? Scalar(re, 0.0) : Scalar(re, normal(rng));
    }
    x /= x.norm();
    const Vector v(s.field(), std::move(x));
    const double q = inner(s * v, v).real();
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  return Json{{"samples", samples}, {"seed", seed}, {"min", lo}, {"max", hi}};
}

// -- commands ----------------------------------------------------------------

struct AnalyzeArgs {
  std::vector<std::string> names;
  std::vector<double> stated;
  std::size_t samples = 0;
};

Emission cmd_analyze(const Globals& g, const AnalyzeArgs& a) {
  const FamilyFile file = load_input(g);
  const auto [f, gg] = named_pair(file, a.names);
  const BiframeReport r = analyze_biframe(f, gg, g.tol);
  Json j = header("analyze", g);
  j["families"] = a.names;
  add_analysis(j, r);
  j["is_pair_frame"] = r.smallest_singular_value > g.tol.inv;
  if (!a.stated.empty()) {
    if (!(a.stated[0] > 0.0) || !(a.stated[1] > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "stated bounds must be positive");
    }
    const bool valid =
        r.classification == Classification::Biframe && verify_bounds(f, gg, a.stated[0], a.stated[1], g.tol);
    j["stated_bounds"] = Json{{"lower", a.stated[0]}, {"upper", a.stated[1]}, {"valid", valid}};
  }
  if (a.samples > 0) j["sampled_form"] = sampled_form(r.op, a.samples, g.seed);
  return {render(j, g), exit_code(r.classification)};
}

struct ReconstructArgs {
  std::vector<std::string> names;
  std::string vector;
  std::string vector_file;
};

Emission cmd_reconstruct(const Globals& g, const ReconstructArgs& a) {
  const FamilyFile file = load_input(g);
  const auto [f, gg] = named_pair(file, a.names);
  if (a.vector.empty() && a.vector_file.empty()) {
    throw Error(ErrorKind::InvalidArgument, "reconstruct needs --vector or --vector-file");
  }
  const std::string text = a.vector_file.empty() ? a.vector : read_file(a.vector_file);
  const Vector x = detail::read_vector(detail::parse_json(text, "vector"), file.field, "vector");

  const BiframeReport r = analyze_biframe(f, gg, g.tol);
  const Reconstruction rec = reconstruct(f, gg, x, g.tol);
  const std::vector<Scalar> coeffs = biframe_coefficients(f, gg, x, g.tol);
  const double limit = g.tol.recon * condition_number(r.op);

  Json j = header("reconstruct", g);
  j["families"] = a.names;
  add_analysis(j, r);
  j["residuals"] = Json{{"coefficients", rec.residual_coefficients}, {"dual_family", rec.residual_dual_family}};
  j["residual_limit"] = limit;
  ComplexColumn c(static_cast<Index>(coeffs.size()));
  for (std::size_t k = 0; k < coeffs.size(); ++k) c(static_cast<Index>(k)) = coeffs[k];
  j["coefficients"] = encode(Vector(file.field, std::move(c)));
  j["input"] = encode(x);
  j["via_coefficients"] = encode(rec.via_coefficients);
  j["via_dual_family"] = encode(rec.via_dual_family);
  const bool ok = rec.residual_coefficients <= limit && rec.residual_dual_family <= limit;
  return {render(j, g), ok ? kSuccess : kNumericalFailure};
}

Emission cmd_spectrum(const Globals& g, const std::vector<std::string>& names) {
  const FamilyFile file = load_input(g);
  const auto [f, gg] = named_pair(file, names);
  const BiframeReport r = analyze_biframe(f, gg, g.tol);
  if (g.format == "json") {
    Json j = header("spectrum", g);
    j["families"] = names;
    j["spectrum"] = r.spectrum;
    return {j.dump(2) + "\n", kSuccess};
  }
  std::ostringstream os;
  os << "index,value\n";
  for (std::size_t i = 0; i < r.spectrum.size(); ++i) os << i << ',' << Json(r.spectrum[i]).dump() << '\n';
  return {os.str(), kSuccess};
}

struct FixturesArgs {
  bool list = false;
  Index dim = fixtures::kDefaultTruncation;
};

Emission cmd_fixtures(const Globals& g, const FixturesArgs& a) {
  const auto& rows = fixtures::corpus();
  if (a.list) {
    Json list = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      list.push_back(Json{{"index", i}, {"name", rows[i].name}, {"truncated", rows[i].truncated},
                          {"expected", rows[i].expected}});
    }
    if (g.format == "json") return {Json{{"command", "fixtures"}, {"rows", list}}.dump(2) + "\n", kSuccess};
    std::ostringstream os;
    for (const Json& row : list) {
      os << row["index"].get<std::size_t>() << "  " << row["name"].get<std::string>()
         << (row["truncated"].get<bool>() ? " (truncated)" : "") << "  " << row["expected"].get<std::string>() << '\n';
    }
    return {os.str(), kSuccess};
  }

  const std::vector<fixtures::FixtureResult> results = fixtures::run_corpus(a.dim, g.tol);
  const auto passed = static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; }));
  const int code = passed == results.size() ? kSuccess : kNumericalFailure;
  if (g.format == "json") {
    Json j = header("fixtures", g);
    j["truncation"] = a.dim;
    Json list = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      list.push_back(Json{{"index", i}, {"name", results[i].name}, {"truncated", rows[i].truncated},
                          {"expected", results[i].expected}, {"observed", results[i].observed},
                          {"pass", results[i].pass}});
    }
    j["rows"] = std::move(list);
    j["passed"] = passed;
    j["failed"] = results.size() - passed;
    return {j.dump(2) + "\n", code};
  }
  std::ostringstream os;
  os << "fixtures at truncation " << a.dim << '\n';
  for (const auto& r : results) {
    os << (r.pass ? "PASS  " : "FAIL  ") << r.name << "\n      expected: " << r.expected
       << "\n      observed: " << r.observed << '\n';
  }
  os << passed << '/' << results.size() << " rows passed\n";
  return {os.str(), code};
}

// -- construct -----------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  std::string params;
  std::string emit;
  bool hex = false;
};

class Params {
 public:
  Params(Json doc, std::optional<FamilyFile> input) : doc_(std::move(doc)), input_(std::move(input)) {
    if (!doc_.is_object()) throw ParseError("params: top level must be an object");
    if (input_) {
      field_ = input_->field;
      dim_ = input_->dim;
      if (doc_.contains("field") && doc_["field"] != (field_ == Field::Real ? "real" : "complex")) {
        throw Error(ErrorKind::FieldMismatch, "params: field differs from the input file");
      }
    } else {
      const auto f = doc_.find("field");
      const auto d = doc_.find("dim");
      if (f == doc_.end() || (*f != "real" && *f != "complex")) {
        throw ParseError("params: \"field\" must be \"real\" or \"complex\" when no --input is given");
      }
      if (d == doc_.end() || !d->is_number_integer() || d->get<long long>() < 1) {
        throw ParseError("params: \"dim\" must be a positive integer when no --input is given");
      }
      field_ = *f == "real" ? Field::Real : Field::Complex;
      dim_ = d->get<Index>();
    }
  }

  Field field() const { return field_; }
  Index dim() const { return dim_; }

  /// Rows, or {"diag": [...]}; `fallback_identity` makes the key optional.
  Operator op(const std::string& key, bool fallback_identity = false) const {
    const auto it = doc_.find(key);
    if (it == doc_.end()) {
      if (fallback_identity) return Operator::identity(field_, dim_);
      throw ParseError("params: missing operator \"" + key + "\"");
    }
    Operator m = [&] {
      if (it->is_object() && it->contains("diag")) {
        const Vector d = detail::read_vector((*it)["diag"], field_, "params." + key + ".diag");
        return Operator(field_, d.entries().asDiagonal().toDenseMatrix());
      }
      return detail::read_operator(*it, field_, "params." + key);
    }();
    if (m.dim() != dim_) {
      throw Error(ErrorKind::DimensionMismatch, "params: operator \"" + key + "\" has the wrong dimension");
    }
    return m;
  }

  double number(const std::string& key) const {
    const auto it = doc_.find(key);
    if (it == doc_.end()) throw ParseError("params: missing number \"" + key + "\"");
    return detail::read_number(*it, "params." + key);
  }

  /// A family named by params[key] in the input file.
  VectorFamily family(const std::string& key) const {
    const auto it = doc_.find(key);
    if (it == doc_.end() || !it->is_string()) throw ParseError("params: \"" + key + "\" must name an input family");
    if (!input_) throw Error(ErrorKind::InvalidArgument, "params: \"" + key + "\" needs --input");
    return input_->family(it->get<std::string>());
  }

  bool has(const std::string& key) const { return doc_.contains(key); }

  /// The named basis, or the standard basis when absent.
  VectorFamily basis(const std::string& key) const {
    return has(key) ? family(key) : VectorFamily::standard_basis(field_, dim_);
  }

 private:
  Json doc_;
  std::optional<FamilyFile> input_;
  Field field_ = Field::Real;
  Index dim_ = 0;
};

Emission cmd_construct(const Globals& g, const ConstructArgs& a) {
  std::optional<FamilyFile> input;
  if (!g.input.empty()) input = load_input(g);
  const Params p(detail::parse_json(read_file(a.params), "params"), input);

  Json j = header("construct", g);
  j["kind"] = a.kind;
  std::optional<FamilyPair> built;
  std::optional<Operator> predicted;
  if (a.kind == "transform") {
    const VectorFamily f = p.family("f");
    const VectorFamily gg = p.family("g");
    const Operator q = p.op("Q");
    const ExponentQuadruple exps(p.number("p"), p.number("q"), p.number("r"), p.number("t"));
    TransformResult t = transform_biframe(f, gg, q, p.op("W", true), p.op("T", true), exps, g.tol);
    j["u"] = encode(t.u);
    j["v"] = encode(t.v);
    j["vu_star_is_identity"] = parseval_transform_check(t.u, t.v, g.tol);
    built = FamilyPair{std::move(t.f), std::move(t.g)};
    predicted = q;
  } else if (a.kind == "from-onb") {
    const Operator q = p.op("Q");
    built = construct_from_onb(p.basis("e"), q, p.op("W", true), p.op("T", true), p.number("r"), p.number("t"), g.tol);
    predicted = q;
  } else if (a.kind == "gdual") {
    const VectorFamily f = p.family("f");
    const Operator q = p.op("Q");
    VectorFamily partner = p.has("h") ? gdual_partner(f, q, p.family("h"), g.tol) : gdual_partner(f, q, g.tol);
    built = FamilyPair{f, std::move(partner)};
    predicted = invert(q, g.tol);
  } else if (a.kind == "riesz-partner") {
    const VectorFamily f = p.family("f");
    const Operator q = p.op("Q");
    built = FamilyPair{f, riesz_partner(f, q, g.tol)};
    predicted = invert(q, g.tol);
  } else {
    const Operator q = p.op("Q", true);
    built = briesz_partner(p.basis("e"), p.op("U"), q, g.tol);
    predicted = q;
  }

  FamilyFile out{p.field(), p.dim(), {{"F", built->f}, {"G", built->g}}, std::nullopt, "construct " + a.kind};
  const std::string family_text = write_family_file(out, a.hex);
  if (a.emit.empty()) {
    j["constructed"] = Json::parse(family_text);
  } else {
    write_file(a.emit, family_text);
    j["constructed"] = a.emit;
  }

  const BiframeReport r = analyze_biframe(built->f, built->g, g.tol);
  add_analysis(j, r);
  j["predicted_operator"] = encode(*predicted);
  j["deviation"] = (r.op - *predicted).frobenius_norm();
  j["parseval"] = r.classification == Classification::Biframe &&
                  (r.op - Operator::identity(r.op.field(), r.op.dim())).frobenius_norm() <= g.tol.recon;
  return {render(j, g), exit_code(r.classification)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frames and biframes of finite vector families"};
  app.name("biframe");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--input", g.input, "family file");
  app.add_option("--output", g.output, "write the report here instead of stdout");
  app.add_option("--format", g.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--tol-herm", g.tol.herm, "relative Hermitian deviation threshold");
  app.add_option("--tol-pd", g.tol.pd, "relative zero band for eigenvalues");
  app.add_option("--tol-inv", g.tol.inv, "smallest singular value treated as invertible");
  app.add_option("--tol-recon", g.tol.recon, "residual threshold for identities");

  AnalyzeArgs analyze;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "classify a pair and report bounds");
  analyze_cmd->add_option("names", analyze.names, "two family names F G")->required()->expected(2);
  analyze_cmd->add_option("--stated-bounds", analyze.stated, "check that [A, B] contains the optimal bounds")
      ->expected(2);
  analyze_cmd->add_option("--samples", analyze.samples, "sample Re<Sx, x> over this many random unit vectors");

  ReconstructArgs recon;
  CLI::App* recon_cmd = app.add_subcommand("reconstruct", "reconstruct a vector from biframe coefficients");
  recon_cmd->add_option("names", recon.names, "two family names F G")->required()->expected(2);
  CLI::Option* inline_vec = recon_cmd->add_option("--vector", recon.vector, "JSON array");
  CLI::Option* file_vec = recon_cmd->add_option("--vector-file", recon.vector_file, "file holding a JSON array");
  inline_vec->excludes(file_vec);

  ConstructArgs construct;
  CLI::App* construct_cmd = app.add_subcommand("construct", "build a biframe from operators");
  construct_cmd->add_option("kind", construct.kind)
      ->required()
      ->check(CLI::IsMember({"transform", "from-onb", "gdual", "riesz-partner", "briesz-partner"}));
  construct_cmd->add_option("--params", construct.params, "JSON parameter file")->required();
  construct_cmd->add_option("--emit", construct.emit, "write the constructed families here");
  construct_cmd->add_flag("--hex-floats", construct.hex, "write family entries as hex floats");

  FixturesArgs fx;
  CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "run the built-in example corpus");
  fixtures_cmd->add_flag("--list", fx.list, "list rows without running them");
  fixtures_cmd->add_option("--dim-override", fx.dim, "dimension of truncated rows")->check(CLI::Range(2, 4096));

  std::vector<std::string> names;
  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of the symmetric part of S as CSV");
  spectrum_cmd->add_option("names", names, "two family names F G")->required()->expected(2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kValidationFailure;
  }

  try {
    g.tol.validate();
    Emission result{"", kSuccess};
    if (*analyze_cmd) {
      result = cmd_analyze(g, analyze);
    } else if (*recon_cmd) {
      result = cmd_reconstruct(g, recon);
    } else if (*construct_cmd) {
      result = cmd_construct(g, construct);
    } else if (*fixtures_cmd) {
      result = cmd_fixtures(g, fx);
    } else {
      result = cmd_spectrum(g, names);
    }
    if (g.output.empty()) {
      out << result.body;
    } else {
      write_file(g.output, result.body);
    }
    return result.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseFailure;
  }
}

}  // namespace biframe::cli
