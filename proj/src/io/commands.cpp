#include "rtorsion/io/commands.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "rtorsion/errors.hpp"
#include "rtorsion/torsion/wada.hpp"

namespace rtorsion::io {

using topology::DiagnosticsReport;
using topology::Monicity;

Engine engine_from_string(const std::string& s) {
  if (s == "wada") return Engine::wada;
  if (s == "fibered") return Engine::fibered;
  if (s == "both") return Engine::both;
  throw InputError("unknown engine '" + s + "' (expected wada, fibered or both)");
}

namespace {

std::vector<std::string> phi_warnings(const group::GroupPresentation& pres, const std::vector<long>& phi) {
  auto check = rep::validate_phi(pres, phi);
  if (check.primitive) return {};
  return {"phi is not primitive (gcd " + std::to_string(check.gcd) +
          "); the fibered-class statements assume a primitive class"};
}

DiagnosticsReport diagnose_problem(const ProblemFile& p) {
  auto warnings = phi_warnings(p.presentation, p.twist.phi());
  auto v = torsion::wada_torsion(p.presentation, p.twist);
  return topology::diagnose(v, p.options.search_bound, p.options.known_norm, std::move(warnings));
}

json presentation_to_json(const group::GroupPresentation& pres) {
  json rels = json::array();
  for (const auto& r : pres.relators()) rels.push_back(pres.format_word(r));
  return json{{"generators", pres.generators()}, {"relators", rels}};
}

json selection_to_json(const std::optional<torsion::Selection>& s) {
  if (!s) return nullptr;
  return json{{"rows3", s->rows3}, {"cols1", s->cols1}};
}

std::string opt_str(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }

json opt_json(const std::optional<long>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json cmd_torsion(const ProblemFile& problem) {
  auto report = diagnose_problem(problem);
  return json{{"command", "torsion"}, {"name", problem.name}, {"report", report_to_json(report)}};
}

json cmd_turaev(const ComplexFile& file, bool verify_selections) {
  json out{{"command", "turaev"}, {"name", file.name}};
  std::optional<algebra::RationalFunction> value;
  if (file.selection) {
    auto r = torsion::turaev_torsion(file.complex, *file.selection);
    out["selection"] = selection_to_json(file.selection);
    if (!r.ok()) {
      out["status"] = "selection failure";
      out["value"] = nullptr;
      out["text"] = nullptr;
      out["zero_reason"] = nullptr;
      return out;
    }
    value = r.value;
    out["agreement"] = nullptr;
  } else {
    auto r = torsion::all_selections_torsion(file.complex, verify_selections);
    value = r.value;
    out["selection"] = selection_to_json(r.selection);
    out["selections_tried"] = r.tried;
    out["selections_succeeded"] = r.succeeded;
    out["agreement"] = verify_selections ? json(r.agreement) : json(nullptr);
    if (verify_selections && !r.agreement)
      throw PropertyViolation("Turaev selections disagree beyond sign for complex '" + file.name + "'");
  }
  out["status"] = "ok";
  out["value"] = value ? rational_to_json(*value) : json(nullptr);
  out["text"] = value ? value->to_string() : "0";
  out["zero_reason"] = value ? "none" : "not acyclic";
  return out;
}

json cmd_mapping_torus(const MonodromyFile& file, Engine engine) {
  auto torus = topology::mapping_torus_presentation(file.monodromy);
  auto warnings = phi_warnings(torus.presentation, torus.phi);
  json out{{"command", "mapping-torus"},
           {"name", file.name},
           {"presentation", presentation_to_json(torus.presentation)},
           {"phi", torus.phi},
           {"fiber_norm", file.monodromy.fiber_norm()}};
  json engines = json::object();
  std::optional<torsion::TorsionValue> wada, fibered;
  if (engine != Engine::fibered) {
    wada = torsion::wada_torsion(torus.presentation, file.twist);
    engines["wada"] =
        report_to_json(topology::diagnose(*wada, file.options.search_bound, file.options.known_norm, warnings));
  }
  if (engine != Engine::wada) {
    fibered = topology::fibered_torsion_formula(file.monodromy, file.twist);
    engines["fibered"] =
        report_to_json(topology::diagnose(*fibered, file.options.search_bound, file.options.known_norm, warnings));
  }
  out["engines"] = engines;
  if (wada && fibered) {
    bool agree = wada->value.has_value() == fibered->value.has_value() &&
                 (!wada->value || algebra::equal_up_to_sign(*wada->value, *fibered->value));
    out["agreement"] = agree;
    if (!agree)
      throw PropertyViolation("engines disagree on '" + file.name + "': wada " + wada->to_string() + ", fibered " +
                              fibered->to_string());
  } else {
    out["agreement"] = nullptr;
  }
  return out;
}

bool CorpusResult::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CorpusRow& r) { return r.pass; });
}

namespace {

void check_report(CorpusRow& row, const DiagnosticsReport& r, const json& expected, bool fibered) {
  row.k = r.torsion.k;
  row.degree = r.degree;
  row.monic = topology::to_string(r.monic);
  row.bound = r.norm_lower_bound;
  row.known_norm = r.known_norm;
  row.verdict = verdict_label(r.fibered_verdict);
  row.fibered = fibered;

  if (!expected.is_null()) {
    if (expected.contains("value")) {
      const json& ev = expected["value"];
      bool ok = ev.is_null() ? r.torsion.is_zero()
                             : (r.torsion.value && *r.torsion.value == rational_from_json(ev, r.torsion.ring, "expected.value"));
      if (!ok) row.failures.push_back("fixture value mismatch: got " + r.torsion.to_string());
    }
    if (expected.contains("monic") && expected["monic"] != row.monic)
      row.failures.push_back("fixture monic mismatch: got " + row.monic);
    if (expected.contains("verdict") && expected["verdict"] != row.verdict)
      row.failures.push_back("fixture verdict mismatch: got " + row.verdict);
    if (expected.contains("degree") && expected["degree"] != opt_json(r.degree))
      row.failures.push_back("fixture degree mismatch: got " + opt_str(r.degree));
  }
  if (fibered) {
    if (r.monic != Monicity::monic) row.failures.push_back("fibered entry is not monic");
    if (r.known_norm && r.degree != static_cast<long>(r.torsion.k) * *r.known_norm)
      row.failures.push_back("fibered entry has degree " + opt_str(r.degree) + " != k*norm");
    if (r.fibered_verdict.obstructed()) row.failures.push_back("fibered entry is obstructed");
  }
  if (r.known_norm && r.norm_lower_bound && *r.norm_lower_bound > *r.known_norm)
    row.failures.push_back("norm bound " + opt_str(r.norm_lower_bound) + " exceeds known norm");
}

}  // namespace

CorpusRow run_corpus_entry(const std::filesystem::path& file) {
  CorpusRow row;
  row.name = file.stem().string();
  try {
    json j = read_json_file(file);
    if (j.contains("name") && j["name"].is_string()) row.name = j["name"].get<std::string>();
    row.kind = j.value("kind", "presentation");
    if (row.kind == "presentation") {
      auto p = parse_problem(j);
      check_report(row, diagnose_problem(p), p.expected, p.fibered.value_or(false));
    } else if (row.kind == "mapping_torus") {
      auto m = parse_monodromy(j);
      json doc = cmd_mapping_torus(m, Engine::both);
      auto wada = report_from_json(doc["engines"]["wada"]);
      check_report(row, wada, m.expected, m.fibered.value_or(true));
      if (doc["agreement"] != true) row.failures.push_back("engines disagree");
    } else if (row.kind == "complex") {
      auto c = parse_complex(j);
      json doc = cmd_turaev(c, true);
      row.degree = std::nullopt;
      row.monic = "-";
      row.verdict = doc["text"].get<std::string>();
      if (!c.expected.is_null() && c.expected.contains("value")) {
        const json& ev = c.expected["value"];
        bool ok;
        if (ev.is_null()) {
          ok = doc["value"].is_null();
        } else {
          ok = !doc["value"].is_null() &&
               algebra::equal_up_to_sign(rational_from_json(doc["value"], algebra::Domain::rationals(), "value"),
                                         rational_from_json(ev, algebra::Domain::rationals(), "expected.value"));
        }
        if (!ok) row.failures.push_back("fixture value mismatch: got " + doc["text"].get<std::string>());
      }
    } else {
      row.failures.push_back("unknown corpus kind '" + row.kind + "'");
    }
  } catch (const std::exception& e) {
    row.failures.push_back(e.what());
  }
  row.pass = row.failures.empty();
  return row;
}

CorpusResult cmd_corpus(const std::filesystem::path& dir, const std::string& filter, bool fibered_only) {
  if (!std::filesystem::is_directory(dir)) throw InputError("corpus directory '" + dir.string() + "' not found");
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  CorpusResult out;
  for (const auto& f : files) {
    if (!filter.empty() && f.stem().string().find(filter) == std::string::npos) continue;
    CorpusRow row = run_corpus_entry(f);
    if (fibered_only && !row.fibered) continue;
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string render_report_text(const DiagnosticsReport& r) {
  std::string out;
  out += fmt::format("torsion:          {}\n", r.torsion.to_string());
  if (r.torsion.is_zero()) out += fmt::format("zero reason:      {}\n", torsion::to_string(r.torsion.zero_reason));
  out += fmt::format("ring, k:          {}, {}\n", r.torsion.ring.name(), r.torsion.k);
  out += fmt::format("degree:           {}\n", opt_str(r.degree));
  out += fmt::format("monic:            {}\n", topology::to_string(r.monic));
  out += fmt::format("norm lower bound: {} (certified lower bound)\n", opt_str(r.norm_lower_bound));
  if (r.known_norm) out += fmt::format("known norm:       {}\n", *r.known_norm);
  out += fmt::format("fibered verdict:  {}\n", verdict_label(r.fibered_verdict));
  for (const auto& w : r.warnings) out += fmt::format("warning:          {}\n", w);
  return out;
}

std::string render_corpus_table(const CorpusResult& result) {
  std::string out = fmt::format("{:<28} {:<14} {:>2} {:>6} {:<9} {:>5} {:>5}  {:<24} {}\n", "name", "kind", "k",
                                "degree", "monic", "bound", "norm", "verdict", "status");
  for (const auto& r : result.rows) {
    out += fmt::format("{:<28} {:<14} {:>2} {:>6} {:<9} {:>5} {:>5}  {:<24} {}\n", r.name, r.kind,
                       r.k ? std::to_string(*r.k) : "-", opt_str(r.degree), r.monic.empty() ? "-" : r.monic,
                       opt_str(r.bound), opt_str(r.known_norm), r.verdict, r.pass ? "PASS" : "FAIL");
    for (const auto& f : r.failures) out += fmt::format("    ! {}\n", f);
  }
  out += fmt::format("{} entries, {} failing\n", result.rows.size(),
                     std::count_if(result.rows.begin(), result.rows.end(), [](const auto& r) { return !r.pass; }));
  return out;
}

json corpus_to_json(const CorpusResult& result) {
  json rows = json::array();
  for (const auto& r : result.rows)
    rows.push_back(json{{"name", r.name},
                        {"kind", r.kind},
                        {"k", r.k ? json(*r.k) : json(nullptr)},
                        {"degree", opt_json(r.degree)},
                        {"monic", r.monic},
                        {"bound", opt_json(r.bound)},
                        {"known_norm", opt_json(r.known_norm)},
                        {"verdict", r.verdict},
                        {"fibered", r.fibered},
                        {"pass", r.pass},
                        {"failures", r.failures}});
  return json{{"command", "corpus"}, {"rows", rows}, {"all_pass", result.all_pass()}};
}

}  // namespace rtorsion::io
