// Command-line entry point: ingestion, correlation, algebra checking, the
// theorem harness, and the multi-semiring demo sweep.
//
// Exit codes: 0 success; 1 a validation failure or counterexample was
// found; 2 usage or input-format errors.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "semigraph/algebra.hpp"
#include "semigraph/array.hpp"
#include "semigraph/error.hpp"
#include "semigraph/ingest.hpp"
#include "semigraph/render.hpp"
#include "semigraph/witness.hpp"

namespace {

using namespace semigraph;

struct Options {
  std::string input;
  std::string output;
  std::string semiring = "plus.times";
  std::string algebra_file;
  std::string mode = "dense";
  std::string sep = "|";
  std::string format = "json";
  std::string out_field = "Genre";
  std::string in_field = "Writer";
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::size_t budget = 64;
  std::vector<std::string> reweights;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + opt.output + "'");
  out << text;
}

char separator_of(const Options& opt) {
  if (opt.sep.size() != 1) {
    throw ParseError("--sep must be a single character");
  }
  return opt.sep[0];
}

Mode mode_of(const Options& opt) {
  if (opt.mode == "dense") return Mode::kDense;
  if (opt.mode == "sparse") return Mode::kSparse;
  throw ParseError("--mode must be 'sparse' or 'dense'");
}

AlgebraPtr algebra_of(const Options& opt) {
  if (!opt.algebra_file.empty()) {
    return load_algebra(nlohmann::json::parse(read_file(opt.algebra_file)));
  }
  return builtin_algebra(opt.semiring);
}

std::map<std::string, Value> reweight_map(const Options& opt,
                                          const ValueAlgebra& alg) {
  std::map<std::string, Value> out;
  for (const auto& spec : opt.reweights) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("--reweight expects COLUMN=VALUE, got '" + spec + "'");
    }
    out[spec.substr(0, eq)] = alg.parse_value(spec.substr(eq + 1));
  }
  return out;
}

void report_skipped(const std::vector<std::string>& skipped) {
  if (skipped.empty()) return;
  std::cerr << "skipped " << skipped.size()
            << " row(s) lacking a value in a selected field:";
  for (const auto& row : skipped) std::cerr << ' ' << row;
  std::cerr << '\n';
}

int run_ingest(const Options& opt) {
  const auto src = TabularSource::from_tsv(read_file(opt.input));
  const auto arr = explode(src, separator_of(opt), algebra_of(opt));
  write_output(opt, opt.format == "text" ? render_text_table(arr)
                                         : arr.to_json().dump(2));
  return 0;
}

int run_correlate(const Options& opt) {
  const auto src = TabularSource::from_tsv(read_file(opt.input));
  const auto alg = algebra_of(opt);
  const auto result =
      correlate_table(src, opt.out_field, opt.in_field, separator_of(opt),
                      alg, mode_of(opt), reweight_map(opt, *alg));
  report_skipped(result.skipped_rows);
  write_output(opt, opt.format == "text"
                        ? render_text_table(result.adjacency)
                        : result.adjacency.to_json().dump(2));
  return 0;
}

int run_check_algebra(const Options& opt) {
  const auto alg = algebra_of(opt);
  const auto report = check_conditions(*alg, opt.budget, opt.seed);
  write_output(opt, opt.format == "text" ? report.render_text()
                                         : report.to_json().dump(2));
  return report.all_hold() ? 0 : 1;
}

int run_test_theorem(const Options& opt) {
  const auto alg = algebra_of(opt);
  const auto verdict = test_theorem(alg, opt.trials, opt.seed);
  if (opt.format == "text") {
    std::ostringstream out;
    out << verdict.conditions.render_text();
    if (verdict.counterexample) {
      const auto& ce = *verdict.counterexample;
      out << "counterexample (lemma " << ce.lemma << "): "
          << to_string(ce.violation.violations.front().kind) << " at ("
          << ce.violation.violations.front().row << ", "
          << ce.violation.violations.front().col << ")\n";
      out << render_text_table(ce.product);
    } else {
      out << "forward trials clean: " << verdict.forward_trials << "/"
          << verdict.trials_requested << "\n";
    }
    write_output(opt, out.str());
  } else {
    write_output(opt, verdict.to_json().dump(2));
  }
  return verdict.counterexample ? 1 : 0;
}

int run_demo(const Options& opt) {
  const std::string text =
      opt.input.empty() ? demo_dataset_tsv() : read_file(opt.input);
  const auto src = TabularSource::from_tsv(text);
  const char sep = separator_of(opt);
  const Mode mode = mode_of(opt);

  // Sweep the numeric operator pairs over the same incidence pair and stack
  // the ones that produce identical tables.
  struct Group {
    std::vector<std::string> names;
    std::string table;
  };
  std::vector<Group> groups;
  nlohmann::json results = nlohmann::json::object();
  for (const auto& name : numeric_semiring_names()) {
    const auto alg = builtin_algebra(name);
    const auto result =
        correlate_table(src, opt.out_field, opt.in_field, sep, alg, mode,
                        reweight_map(opt, *alg));
    report_skipped(result.skipped_rows);
    const std::string table = render_text_table(result.adjacency);
    results[name] = result.adjacency.to_json();
    bool placed = false;
    for (auto& g : groups) {
      if (g.table == table) {
        g.names.push_back(name);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back(Group{{name}, table});
  }

  if (opt.format == "text") {
    std::ostringstream out;
    for (const auto& g : groups) {
      out << "-- ";
      for (std::size_t i = 0; i < g.names.size(); ++i) {
        if (i) out << " / ";
        out << g.names[i];
      }
      out << " --\n" << g.table << '\n';
    }
    write_output(opt, out.str());
  } else {
    nlohmann::json j;
    j["results"] = std::move(results);
    auto stacked = nlohmann::json::array();
    for (const auto& g : groups) stacked.push_back(g.names);
    j["groups"] = std::move(stacked);
    write_output(opt, j.dump(2));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semigraph: sparse associative arrays over pluggable "
               "semirings, incidence-to-adjacency graph construction, and "
               "an algebra-condition test harness"};
  app.require_subcommand(1);

  Options opt;

  auto add_semiring = [&](CLI::App* cmd) {
    cmd->add_option("--semiring", opt.semiring,
                    "value algebra name (see README for the list)");
  };
  auto add_algebra_file = [&](CLI::App* cmd) {
    cmd->add_option("--algebra-file", opt.algebra_file,
                    "JSON custom algebra description (overrides --semiring)");
  };
  auto add_io = [&](CLI::App* cmd, bool input_required) {
    auto* in = cmd->add_option("--input", opt.input, "input TSV path");
    if (input_required) in->required();
    cmd->add_option("--output", opt.output, "write output here (default stdout)");
    cmd->add_option("--format", opt.format, "json or text");
  };
  auto add_table_flags = [&](CLI::App* cmd) {
    cmd->add_option("--sep", opt.sep, "column/value separator (default '|')");
    cmd->add_option("--out-field", opt.out_field,
                    "field providing e_out columns");
    cmd->add_option("--in-field", opt.in_field,
                    "field providing e_in columns");
    cmd->add_option("--mode", opt.mode, "sparse or dense (default dense)");
    cmd->add_option("--reweight", opt.reweights,
                    "COLUMN=VALUE replacement for nonzeros of that column");
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed, "RNG seed")
        ->envname("SEMIGRAPH_SEED");
  };

  auto* ingest_cmd =
      app.add_subcommand("ingest", "explode a TSV table into a sparse array");
  add_io(ingest_cmd, true);
  add_semiring(ingest_cmd);
  ingest_cmd->add_option("--sep", opt.sep, "column/value separator");

  auto* correlate_cmd = app.add_subcommand(
      "correlate", "adjacency array of transpose(E1) . E2 for two fields");
  add_io(correlate_cmd, true);
  add_semiring(correlate_cmd);
  add_table_flags(correlate_cmd);

  auto* check_cmd = app.add_subcommand(
      "check-algebra", "verdicts for zero-sum-freeness, zero divisors, and "
                       "the annihilator law");
  add_io(check_cmd, false);
  add_semiring(check_cmd);
  add_algebra_file(check_cmd);
  add_seed(check_cmd);
  check_cmd->add_option("--budget", opt.budget, "sample-size bound");

  auto* theorem_cmd = app.add_subcommand(
      "test-theorem", "test both directions of the condition/adjacency "
                      "equivalence; exit 1 when a counterexample is found");
  add_io(theorem_cmd, false);
  add_semiring(theorem_cmd);
  add_algebra_file(theorem_cmd);
  add_seed(theorem_cmd);
  theorem_cmd->add_option("--trials", opt.trials,
                          "random forward-direction instances");

  auto* demo_cmd = app.add_subcommand(
      "demo", "the bundled music table multiplied under all seven numeric "
              "semirings, identical tables stacked");
  add_io(demo_cmd, false);
  add_table_flags(demo_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // The demo is a terminal presentation first; JSON is opt-in there.
  if (app.got_subcommand(demo_cmd) && demo_cmd->count("--format") == 0) {
    opt.format = "text";
  }

  try {
    if (app.got_subcommand(ingest_cmd)) return run_ingest(opt);
    if (app.got_subcommand(correlate_cmd)) return run_correlate(opt);
    if (app.got_subcommand(check_cmd)) return run_check_algebra(opt);
    if (app.got_subcommand(theorem_cmd)) return run_test_theorem(opt);
    if (app.got_subcommand(demo_cmd)) return run_demo(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
