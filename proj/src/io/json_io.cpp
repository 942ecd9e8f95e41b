#include "rtorsion/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "rtorsion/errors.hpp"

namespace rtorsion::io {

using algebra::Domain;
using algebra::ExactMatrix;
using algebra::LaurentPolynomial;
using algebra::RationalFunction;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

const json* optional_field(const json& j, const std::string& key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return (it == j.end() || it->is_null()) ? nullptr : &*it;
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

long get_long(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::vector<std::string> get_strings(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::size_t> get_indices(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    long v = get_long(j[i], path + "[" + std::to_string(i) + "]");
    if (v < 0) fail(path + "[" + std::to_string(i) + "]", "negative index");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

mpq_class scalar_from_json(const json& j, const std::string& path) {
  try {
    if (j.is_number_integer()) return mpq_class(std::to_string(j.get<long long>()), 10);
    if (j.is_number_unsigned()) return mpq_class(std::to_string(j.get<unsigned long long>()), 10);
    if (j.is_string()) return algebra::parse_scalar(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
  fail(path, "expected an exact scalar (integer or \"p/q\" string)");
}

// Runs `f`, prefixing any InputError with the field path.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    std::string msg = e.what();
    if (msg.starts_with(path)) throw;
    fail(path, msg);
  }
}

ExactMatrix matrix_from_json(const json& j, const Domain& d, std::size_t rows, std::size_t cols,
                             const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (j.size() != rows)
    fail(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  ExactMatrix m(d, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) fail(rp, "expected a row array");
    if (j[i].size() != cols) fail(rp, "expected " + std::to_string(cols) + " entries, got " + std::to_string(j[i].size()));
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = laurent_from_json(j[i][c], d, rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

// Representation block shared by problem and monodromy files.
rep::TwistData twist_from_json(const json* rep_json, const std::vector<std::string>& generators,
                               std::vector<long> phi, const std::string& path) {
  if (!rep_json) return rep::TwistData::trivial(std::move(phi));
  const json& r = *rep_json;
  Domain d = at_path(path + ".ring", [&] { return Domain::parse(get_string(field(r, "ring", path), path + ".ring")); });
  long k = get_long(field(r, "k", path), path + ".k");
  if (k <= 0) fail(path + ".k", "must be positive");
  const json& images = field(r, "images", path);
  if (!images.is_object()) fail(path + ".images", "expected an object keyed by generator");
  std::vector<ExactMatrix> mats;
  for (const auto& g : generators) {
    const std::string gp = path + ".images." + g;
    auto it = images.find(g);
    if (it == images.end()) fail(gp, "missing");
    ExactMatrix m = matrix_from_json(*it, d, static_cast<std::size_t>(k), static_cast<std::size_t>(k), gp);
    if (!m.is_constant()) fail(gp, "representation entries must be constants");
    mats.push_back(std::move(m));
  }
  for (const auto& [name, _] : images.items())
    if (std::find(generators.begin(), generators.end(), name) == generators.end())
      fail(path + ".images." + name, "unknown generator");
  return at_path(path, [&] { return rep::TwistData(d, static_cast<std::size_t>(k), std::move(phi), std::move(mats)); });
}

RunOptions options_from_json(const json& j) {
  RunOptions o;
  const json* opt = optional_field(j, "options");
  if (!opt) return o;
  if (const json* sb = optional_field(*opt, "search_bound")) {
    o.search_bound = static_cast<int>(get_long(*sb, "options.search_bound"));
    if (o.search_bound < 0) fail("options.search_bound", "must be nonnegative");
  }
  if (const json* kn = optional_field(*opt, "known_norm")) o.known_norm = get_long(*kn, "options.known_norm");
  return o;
}

std::optional<bool> fibered_from_json(const json& j) {
  const json* f = optional_field(j, "fibered");
  if (!f) return std::nullopt;
  if (!f->is_boolean()) fail("fibered", "expected a boolean");
  return f->get<bool>();
}

json optional_to_json(const std::optional<long>& v) { return v ? json(*v) : json(nullptr); }

std::optional<long> optional_long(const json& j, const std::string& key, const std::string& path) {
  const json* f = optional_field(j, key);
  if (!f) return std::nullopt;
  return get_long(*f, path + "." + key);
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

LaurentPolynomial laurent_from_json(const json& j, const Domain& d, const std::string& path) {
  if (j.is_number_integer() || j.is_number_unsigned()) return LaurentPolynomial::constant(d, scalar_from_json(j, path));
  if (j.is_string()) return at_path(path, [&] { return LaurentPolynomial::parse(d, j.get<std::string>()); });
  if (j.is_object()) {
    LaurentPolynomial::Terms terms;
    for (const auto& [key, value] : j.items()) {
      long e = 0;
      try {
        std::size_t used = 0;
        e = std::stol(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail(path + "." + key, "exponent keys must be integers");
      }
      mpq_class c = scalar_from_json(value, path + "." + key);
      if (!terms.emplace(e, c).second) fail(path + "." + key, "duplicate exponent");
    }
    return at_path(path, [&] { return LaurentPolynomial(d, terms); });
  }
  fail(path, "expected a Laurent polynomial literal");
}

json laurent_to_json(const LaurentPolynomial& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.get_str();
  return out;
}

json rational_to_json(const RationalFunction& r) {
  return json{{"numerator", laurent_to_json(r.numerator())}, {"denominator", laurent_to_json(r.denominator())}};
}

RationalFunction rational_from_json(const json& j, const Domain& d, const std::string& path) {
  Domain f = d.quotient_field();
  auto num = laurent_from_json(field(j, "numerator", path), f, path + ".numerator");
  auto den = laurent_from_json(field(j, "denominator", path), f, path + ".denominator");
  return at_path(path, [&] { return RationalFunction::normalize(num, den); });
}

json units_to_json(const rep::UnitSpec& u) {
  json gens = json::array();
  for (const auto& g : u.generators) gens.push_back(g.get_str());
  const char* kind = u.kind == rep::UnitSpec::Kind::plus_minus_one ? "plus-minus-one"
                     : u.kind == rep::UnitSpec::Kind::generated_by ? "generated-by"
                                                                  : "unknown";
  return json{{"kind", kind}, {"generators", gens}};
}

rep::UnitSpec units_from_json(const json& j, const Domain& d, const std::string& path) {
  rep::UnitSpec u;
  std::string kind = get_string(field(j, "kind", path), path + ".kind");
  if (kind == "plus-minus-one")
    u.kind = rep::UnitSpec::Kind::plus_minus_one;
  else if (kind == "generated-by")
    u.kind = rep::UnitSpec::Kind::generated_by;
  else if (kind == "unknown")
    u.kind = rep::UnitSpec::Kind::unknown;
  else
    fail(path + ".kind", "unknown unit spec '" + kind + "'");
  if (const json* gens = optional_field(j, "generators")) {
    if (!gens->is_array()) fail(path + ".generators", "expected an array");
    for (std::size_t i = 0; i < gens->size(); ++i) {
      const std::string gp = path + ".generators[" + std::to_string(i) + "]";
      mpq_class g = scalar_from_json((*gens)[i], gp);
      if (!d.contains(g) || !d.is_unit(g)) fail(gp, "not a unit of " + d.name());
      u.generators.push_back(g);
    }
  }
  return u;
}

json torsion_to_json(const torsion::TorsionValue& v) {
  json out;
  out["value"] = v.value ? rational_to_json(*v.value) : json(nullptr);
  out["text"] = v.to_string();
  out["zero_reason"] = torsion::to_string(v.zero_reason);
  out["ring"] = v.ring.name();
  out["k"] = v.k;
  out["units"] = units_to_json(v.units);
  out["chosen_column"] = v.chosen_column ? json(*v.chosen_column) : json(nullptr);
  return out;
}

torsion::TorsionValue torsion_from_json(const json& j, const std::string& path) {
  torsion::TorsionValue v;
  v.ring = at_path(path + ".ring", [&] { return Domain::parse(get_string(field(j, "ring", path), path + ".ring")); });
  long k = get_long(field(j, "k", path), path + ".k");
  if (k <= 0) fail(path + ".k", "must be positive");
  v.k = static_cast<std::size_t>(k);
  if (const json* val = optional_field(j, "value")) v.value = rational_from_json(*val, v.ring, path + ".value");
  v.zero_reason = at_path(path + ".zero_reason", [&] {
    return torsion::zero_reason_from_string(get_string(field(j, "zero_reason", path), path + ".zero_reason"));
  });
  v.units = units_from_json(field(j, "units", path), v.ring, path + ".units");
  if (auto c = optional_long(j, "chosen_column", path)) {
    if (*c < 0) fail(path + ".chosen_column", "negative index");
    v.chosen_column = static_cast<std::size_t>(*c);
  }
  return v;
}

std::string verdict_label(const topology::FiberedVerdict& v) {
  if (!v.obstructed()) return "NoObstruction";
  return "Obstructed(" + topology::to_string(v.reason) + ")";
}

json verdict_to_json(const topology::FiberedVerdict& v) {
  return json{{"status", v.obstructed() ? "Obstructed" : "NoObstruction"},
              {"reason", topology::to_string(v.reason)},
              {"label", verdict_label(v)}};
}

topology::FiberedVerdict verdict_from_json(const json& j, const std::string& path) {
  topology::FiberedVerdict v;
  std::string status = get_string(field(j, "status", path), path + ".status");
  if (status == "Obstructed")
    v.status = topology::FiberedVerdict::Status::obstructed;
  else if (status != "NoObstruction")
    fail(path + ".status", "unknown status '" + status + "'");
  v.reason = at_path(path + ".reason", [&] {
    return topology::fibered_reason_from_string(get_string(field(j, "reason", path), path + ".reason"));
  });
  return v;
}

json report_to_json(const topology::DiagnosticsReport& r) {
  json out;
  out["torsion"] = torsion_to_json(r.torsion);
  out["degree"] = optional_to_json(r.degree);
  out["monic"] = topology::to_string(r.monic);
  out["norm_lower_bound"] = optional_to_json(r.norm_lower_bound);
  out["norm_lower_bound_kind"] = "certified lower bound";
  out["known_norm"] = optional_to_json(r.known_norm);
  out["fibered_verdict"] = verdict_to_json(r.fibered_verdict);
  out["warnings"] = r.warnings;
  return out;
}

topology::DiagnosticsReport report_from_json(const json& j) {
  topology::DiagnosticsReport r;
  r.torsion = torsion_from_json(field(j, "torsion", "report"), "report.torsion");
  r.degree = optional_long(j, "degree", "report");
  r.monic = at_path("report.monic",
                    [&] { return topology::monicity_from_string(get_string(field(j, "monic", "report"), "report.monic")); });
  r.norm_lower_bound = optional_long(j, "norm_lower_bound", "report");
  r.known_norm = optional_long(j, "known_norm", "report");
  r.fibered_verdict = verdict_from_json(field(j, "fibered_verdict", "report"), "report.fibered_verdict");
  if (const json* w = optional_field(j, "warnings")) r.warnings = get_strings(*w, "report.warnings");
  return r;
}

ProblemFile parse_problem(const json& j) {
  ProblemFile p;
  if (const json* n = optional_field(j, "name")) p.name = get_string(*n, "name");
  const json& pres = field(j, "presentation", "");
  auto generators = get_strings(field(pres, "generators", "presentation"), "presentation.generators");
  auto relators = get_strings(field(pres, "relators", "presentation"), "presentation.relators");
  p.presentation = at_path("presentation.generators", [&] { return group::GroupPresentation(generators, {}); });
  std::vector<group::FreeWord> words;
  for (std::size_t i = 0; i < relators.size(); ++i)
    words.push_back(at_path("presentation.relators[" + std::to_string(i) + "]",
                            [&] { return p.presentation.parse_word(relators[i]); }));
  p.presentation = group::GroupPresentation(generators, std::move(words));

  const json& phi_json = field(j, "phi", "");
  if (!phi_json.is_object()) fail("phi", "expected an object keyed by generator");
  std::vector<long> phi;
  for (const auto& g : generators) {
    auto it = phi_json.find(g);
    if (it == phi_json.end()) fail("phi." + g, "missing");
    phi.push_back(get_long(*it, "phi." + g));
  }
  for (const auto& [name, _] : phi_json.items())
    if (!p.presentation.index_of(name)) fail("phi." + name, "unknown generator");

  p.twist = twist_from_json(optional_field(j, "representation"), generators, std::move(phi), "representation");
  p.options = options_from_json(j);
  p.fibered = fibered_from_json(j);
  if (const json* e = optional_field(j, "expected")) p.expected = *e;
  return p;
}

ComplexFile parse_complex(const json& j) {
  std::string name;
  if (const json* n = optional_field(j, "name")) name = get_string(*n, "name");
  Domain d = Domain::rationals();
  if (const json* r = optional_field(j, "ring")) d = at_path("ring", [&] { return Domain::parse(get_string(*r, "ring")); });
  const json& dims_json = field(j, "dimensions", "");
  auto dims_vec = get_indices(dims_json, "dimensions");
  if (dims_vec.size() != 4) fail("dimensions", "expected [n3, n2, n1, n0]");
  std::array<std::size_t, 4> dims{dims_vec[0], dims_vec[1], dims_vec[2], dims_vec[3]};
  auto b3 = matrix_from_json(field(j, "B3", ""), d, dims[1], dims[0], "B3");
  auto b2 = matrix_from_json(field(j, "B2", ""), d, dims[2], dims[1], "B2");
  auto b1 = matrix_from_json(field(j, "B1", ""), d, dims[3], dims[2], "B1");
  ComplexFile c{name, torsion::BasedChainComplex(dims, std::move(b3), std::move(b2), std::move(b1)), std::nullopt,
                json()};
  if (const json* s = optional_field(j, "selection"))
    c.selection = torsion::Selection{get_indices(field(*s, "rows3", "selection"), "selection.rows3"),
                                     get_indices(field(*s, "cols1", "selection"), "selection.cols1")};
  if (const json* e = optional_field(j, "expected")) c.expected = *e;
  return c;
}

MonodromyFile parse_monodromy(const json& j) {
  std::string name;
  if (const json* n = optional_field(j, "name")) name = get_string(*n, "name");
  auto generators = get_strings(field(j, "fiber_generators", ""), "fiber_generators");
  std::string stable = "mu";
  if (const json* s = optional_field(j, "stable_letter")) stable = get_string(*s, "stable_letter");
  const json& mono = field(j, "monodromy", "");
  if (!mono.is_object()) fail("monodromy", "expected an object keyed by generator");
  std::map<std::string, std::string> images;
  for (const auto& [g, w] : mono.items()) images[g] = get_string(w, "monodromy." + g);
  auto data = at_path("monodromy", [&] { return topology::MonodromyData::parse(generators, images, stable); });

  auto all = generators;
  all.push_back(stable);
  auto twist = twist_from_json(optional_field(j, "representation"), all, topology::mapping_torus_presentation(data).phi,
                               "representation");
  MonodromyFile m{name, std::move(data), std::move(twist), options_from_json(j), fibered_from_json(j), json()};
  if (!m.options.known_norm) m.options.known_norm = m.monodromy.fiber_norm();
  if (!m.fibered) m.fibered = true;
  if (const json* e = optional_field(j, "expected")) m.expected = *e;
  return m;
}

}  // namespace rtorsion::io
