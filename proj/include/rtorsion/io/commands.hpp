#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rtorsion/io/json_io.hpp"

namespace rtorsion::io {

enum class Engine { wada, fibered, both };
Engine engine_from_string(const std::string& s);

/// Diagnostics for a presented group: validates φ and α, runs the Wada
/// engine and every diagnostic on the result.
json cmd_torsion(const ProblemFile& problem);

/// Torsion of a based complex, with the file's selection if present and
/// otherwise the first successful selection.
json cmd_turaev(const ComplexFile& file, bool verify_selections = false);

/// Builds the mapping torus and runs the requested engines. The document's
/// "agreement" field is null unless both engines ran.
json cmd_mapping_torus(const MonodromyFile& file, Engine engine = Engine::both);

struct CorpusRow {
  std::string name;
  std::string kind;
  std::optional<std::size_t> k;
  std::optional<long> degree;
  std::string monic;
  std::optional<long> bound;
  std::optional<long> known_norm;
  std::string verdict;
  bool fibered = false;
  bool pass = true;
  std::vector<std::string> failures;
};

struct CorpusResult {
  std::vector<CorpusRow> rows;
  bool all_pass() const;
};

/// Runs every *.json entry of `dir` (sorted by file name) whose name
/// contains `filter`, checking fixtures and the fibered-class / norm-bound
/// properties for each.
CorpusResult cmd_corpus(const std::filesystem::path& dir, const std::string& filter = "", bool fibered_only = false);

CorpusRow run_corpus_entry(const std::filesystem::path& file);

std::string render_report_text(const topology::DiagnosticsReport& r);
std::string render_corpus_table(const CorpusResult& result);
json corpus_to_json(const CorpusResult& result);

}  // namespace rtorsion::io
