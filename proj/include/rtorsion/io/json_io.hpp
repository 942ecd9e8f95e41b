#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "rtorsion/topology/diagnostics.hpp"
#include "rtorsion/topology/mapping_torus.hpp"
#include "rtorsion/torsion/turaev.hpp"

// JSON file formats for problems, chain complexes, monodromies and reports.
//
// Laurent literals are accepted as numbers, strings ("t^-1 + 2 - t^3") or
// exponent -> coefficient objects ({"-1": 1, "0": "2", "3": -1}). Output
// always uses the object form with string coefficients.

namespace rtorsion::io {

using json = nlohmann::json;

/// Reads and parses a JSON document; syntax errors become InputError with
/// the byte offset reported by the parser.
json read_json_file(const std::filesystem::path& path);

algebra::LaurentPolynomial laurent_from_json(const json& j, const algebra::Domain& d, const std::string& path);
json laurent_to_json(const algebra::LaurentPolynomial& p);

json rational_to_json(const algebra::RationalFunction& r);
algebra::RationalFunction rational_from_json(const json& j, const algebra::Domain& d, const std::string& path);

json units_to_json(const rep::UnitSpec& u);
rep::UnitSpec units_from_json(const json& j, const algebra::Domain& d, const std::string& path);

json torsion_to_json(const torsion::TorsionValue& v);
torsion::TorsionValue torsion_from_json(const json& j, const std::string& path = "torsion");

json verdict_to_json(const topology::FiberedVerdict& v);
topology::FiberedVerdict verdict_from_json(const json& j, const std::string& path);
/// "NoObstruction" or "Obstructed(<reason>)".
std::string verdict_label(const topology::FiberedVerdict& v);

json report_to_json(const topology::DiagnosticsReport& r);
topology::DiagnosticsReport report_from_json(const json& j);

struct RunOptions {
  int search_bound = topology::default_search_bound;
  std::optional<long> known_norm;
};

/// A twisted-torsion problem on a presented group.
struct ProblemFile {
  std::string name;
  group::GroupPresentation presentation;
  rep::TwistData twist;
  RunOptions options;
  std::optional<bool> fibered;
  json expected;  // null when absent
};

/// Schema: {"presentation": {"generators": [...], "relators": [...]},
///          "phi": {name: int}, "representation": {"ring", "k", "images"},
///          "options": {"search_bound", "known_norm"}}. The representation
/// defaults to the trivial one-dimensional one over the integers.
ProblemFile parse_problem(const json& j);

struct ComplexFile {
  std::string name;
  torsion::BasedChainComplex complex;
  std::optional<torsion::Selection> selection;
  json expected;
};

/// Schema: {"ring", "dimensions": [n3, n2, n1, n0], "B3", "B2", "B1",
///          "selection": {"rows3": [...], "cols1": [...]}}.
ComplexFile parse_complex(const json& j);

struct MonodromyFile {
  std::string name;
  topology::MonodromyData monodromy;
  rep::TwistData twist;  // on fiber generators followed by the stable letter
  RunOptions options;
  std::optional<bool> fibered;
  json expected;
};

/// Schema: {"fiber_generators": [...], "stable_letter": "mu",
///          "monodromy": {name: word}, "representation": {...},
///          "options": {...}}. known_norm defaults to n - 1.
MonodromyFile parse_monodromy(const json& j);

}  // namespace rtorsion::io
