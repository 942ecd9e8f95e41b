// Command-line front end: torsion, turaev, mapping-torus and corpus.
//
// Exit codes: 0 success, 2 input or validation error, 3 unsupported input,
// 4 property violation (engine disagreement or a failing corpus row).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rtorsion/errors.hpp"
#include "rtorsion/io/commands.hpp"

namespace io = rtorsion::io;

namespace {

struct Common {
  std::string input;
  std::string output;
  std::optional<int> search_bound;
  std::optional<long> known_norm;
  std::string format;
};

void add_common(CLI::App* sub, Common& c, bool input_required, const std::string& default_format) {
  auto* in = sub->add_option("--input", c.input, "input file");
  if (input_required) in->required();
  sub->add_option("--output", c.output, "output file (default stdout)");
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
  c.format = default_format;
}

void apply_overrides(io::RunOptions& opts, const Common& c) {
  if (c.search_bound) {
    if (*c.search_bound < 0) throw rtorsion::InputError("--search-bound must be non-negative");
    opts.search_bound = *c.search_bound;
  }
  if (c.known_norm) {
    if (*c.known_norm < 0) throw rtorsion::InputError("--known-norm must be non-negative");
    opts.known_norm = c.known_norm;
  }
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw rtorsion::InputError("cannot open output file '" + c.output + "'");
  out << text;
}

std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

std::string mapping_torus_text(const io::json& doc) {
  std::string out = "mapping torus " + doc["name"].get<std::string>() + "\n";
  for (const auto& [engine, report] : doc["engines"].items()) {
    out += "[" + engine + "]\n" + io::render_report_text(io::report_from_json(report));
  }
  if (!doc["agreement"].is_null()) out += std::string("agreement: ") + (doc["agreement"].get<bool>() ? "true" : "false") + "\n";
  return out;
}

std::string turaev_text(const io::json& doc) {
  std::string out = "complex " + doc["name"].get<std::string>() + "\n";
  out += "status: " + doc["status"].get<std::string>() + "\n";
  if (!doc["text"].is_null()) out += "torsion: " + doc["text"].get<std::string>() + "\n";
  if (!doc["zero_reason"].is_null() && doc["zero_reason"] != "none")
    out += "zero reason: " + doc["zero_reason"].get<std::string>() + "\n";
  if (!doc["selection"].is_null()) out += "selection: " + doc["selection"].dump() + "\n";
  if (doc.contains("agreement") && !doc["agreement"].is_null())
    out += std::string("agreement: ") + (doc["agreement"].get<bool>() ? "true" : "false") + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Reidemeister torsion, Thurston-norm bounds and fiberedness obstructions"};
  app.require_subcommand(1);

  Common torsion_opts, turaev_opts, torus_opts, corpus_opts;
  std::string engine = "both";
  bool verify = false;
  std::string filter;
  bool fibered_only = false;

  auto* torsion = app.add_subcommand("torsion", "torsion and diagnostics of a presented group");
  add_common(torsion, torsion_opts, true, "json");
  torsion->add_option("--search-bound", torsion_opts.search_bound, "unit search bound for monicity");
  torsion->add_option("--known-norm", torsion_opts.known_norm, "known Thurston norm of phi");

  auto* turaev = app.add_subcommand("turaev", "torsion of a based chain complex");
  add_common(turaev, turaev_opts, true, "json");
  turaev->add_flag("--verify-selections", verify, "check that all valid selections agree up to sign");

  auto* torus = app.add_subcommand("mapping-torus", "torsion of a free-group mapping torus");
  add_common(torus, torus_opts, true, "json");
  torus->add_option("--search-bound", torus_opts.search_bound, "unit search bound for monicity");
  torus->add_option("--known-norm", torus_opts.known_norm, "known Thurston norm (default: fiber rank - 1)");
  torus->add_option("--engine", engine, "engine")->check(CLI::IsMember({"wada", "fibered", "both"}));

  auto* corpus = app.add_subcommand("corpus", "run the example corpus and check its properties");
  add_common(corpus, corpus_opts, false, "text");
  corpus_opts.input = RTORSION_CORPUS_DIR;
  corpus->add_option("--filter", filter, "only entries whose file name contains this text");
  corpus->add_flag("--fibered-only", fibered_only, "only entries marked fibered");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*torsion) {
      auto problem = io::parse_problem(io::read_json_file(torsion_opts.input));
      apply_overrides(problem.options, torsion_opts);
      auto doc = io::cmd_torsion(problem);
      emit(torsion_opts, torsion_opts.format == "json"
                             ? dump(doc)
                             : io::render_report_text(io::report_from_json(doc["report"])));
    } else if (*turaev) {
      auto file = io::parse_complex(io::read_json_file(turaev_opts.input));
      auto doc = io::cmd_turaev(file, verify);
      emit(turaev_opts, turaev_opts.format == "json" ? dump(doc) : turaev_text(doc));
    } else if (*torus) {
      auto file = io::parse_monodromy(io::read_json_file(torus_opts.input));
      apply_overrides(file.options, torus_opts);
      auto doc = io::cmd_mapping_torus(file, io::engine_from_string(engine));
      emit(torus_opts, torus_opts.format == "json" ? dump(doc) : mapping_torus_text(doc));
    } else if (*corpus) {
      auto result = io::cmd_corpus(corpus_opts.input, filter, fibered_only);
      emit(corpus_opts, corpus_opts.format == "json" ? dump(io::corpus_to_json(result))
                                                     : io::render_corpus_table(result));
      return result.all_pass() ? 0 : 4;
    }
  } catch (const rtorsion::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const rtorsion::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const rtorsion::PropertyViolation& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
