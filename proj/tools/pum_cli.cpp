// Command-line driver for partition-of-unity benchmark runs.
//
//   pum run    --dim 2 --domain disk --k-level 4 [--out run.csv]
//   pum table  --dim 3 --domain cylinder [--max-n 25000]
//   pum sweep  --dim 2 --domain disk --shape-min 0.1 --shape-max 3 --samples 30
//   pum field  --dim 2 --domain disk --k-level 5 --out field.csv
//
// Exit codes: 0 success, 1 configuration error, 2 numeric failure, 3 I/O.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pum/error.hpp"
#include "pum/experiment.hpp"
#include "pum/report.hpp"

namespace {

enum ExitCode : int { kOk = 0, kConfig = 1, kNumeric = 2, kIo = 3 };

struct CommonFlags {
  pum::ExperimentConfig config;
  std::optional<std::size_t> n;
  std::string out;
};

void add_common(CLI::App& cmd, CommonFlags& flags, bool with_size) {
  auto& c = flags.config;
  cmd.add_option("--dim", c.dim, "Space dimension (2 or 3)")->required();
  cmd.add_option("--domain", c.domain,
                 "triangle|disk|hexagon|pyramid|cylinder|hexprism|cube|hull:FILE")
      ->required();
  cmd.add_option("--shape", c.shape, "Wendland C2 shape parameter")->capture_default_str();
  cmd.add_option("--eval-per-axis", c.eval_per_axis, "Evaluation grid points per axis")
      ->capture_default_str();
  cmd.add_option("--threads", c.threads, "Worker threads (0: all cores)")->capture_default_str();
  cmd.add_option("--radius-scale", c.radius_scale, "Multiplier on the subdomain radius")
      ->capture_default_str();
  cmd.add_option("--jitter", c.jitter, "Diagonal shift for local solves (breaks interpolation)")
      ->capture_default_str();
  cmd.add_flag("--constant-data", c.constant_data, "Use f = 1 instead of Franke's function");
  if (with_size) {
    auto* k = cmd.add_option("--k-level", c.k_level, "Use (10k)^dim Halton candidates, k in 1..5")
                  ->capture_default_str();
    auto* n = cmd.add_option("--n", flags.n, "Exact number of in-domain data points");
    k->excludes(n);
  }
}

pum::ExperimentConfig finish(CommonFlags& flags) {
  flags.config.n = flags.n;
  flags.config.validate();
  return flags.config;
}

std::string title_for(const pum::ExperimentConfig& c) {
  return c.domain + " (dim " + std::to_string(c.dim) + ", shape " + pum::format_sci3(c.shape) +
         ")";
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pum::IoError("cannot open '" + path + "' for writing");
  fn(out);
  out.flush();
  if (!out) throw pum::IoError("failed writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition-of-unity RBF interpolation on convex domains"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  auto* run = app.add_subcommand("run", "Single experiment; prints a summary row");
  add_common(*run, run_flags, true);
  run->add_option("--out", run_flags.out, "Write the run record CSV here");

  CommonFlags table_flags;
  std::optional<std::size_t> max_n;
  auto* table = app.add_subcommand("table", "Runs k-level 1..5 and prints an error table");
  add_common(*table, table_flags, false);
  table->add_option("--max-n", max_n, "Skip levels with more data points than this");
  table->add_option("--out", table_flags.out, "Write the CSV here instead of stdout");

  CommonFlags sweep_flags;
  double shape_min = 0.1;
  double shape_max = 3.0;
  std::size_t samples = 30;
  auto* sweep = app.add_subcommand("sweep", "RMSE over log-spaced shape parameters");
  add_common(*sweep, sweep_flags, true);
  sweep->add_option("--shape-min", shape_min)->capture_default_str();
  sweep->add_option("--shape-max", shape_max)->capture_default_str();
  sweep->add_option("--samples", samples)->capture_default_str();
  sweep->add_option("--out", sweep_flags.out, "Write the shape,rmse series here");

  CommonFlags field_flags;
  auto* field = app.add_subcommand("field", "Exports per-point absolute errors as CSV");
  add_common(*field, field_flags, true);
  field->add_option("--out", field_flags.out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  try {
    if (*run) {
      const auto config = finish(run_flags);
      const auto record = pum::run_experiment(config);
      pum::write_table(std::cout, std::span(&record, 1), title_for(config));
      if (record.uncovered_count > 0) {
        std::cerr << "warning: " << record.uncovered_count
                  << " evaluation points were not covered by any subdomain\n";
      }
      if (!run_flags.out.empty()) {
        with_output(run_flags.out,
                    [&](std::ostream& o) { pum::write_records_csv(o, std::span(&record, 1)); });
      }
    } else if (*table) {
      const auto config = finish(table_flags);
      const auto rows = pum::run_table(config, max_n);
      pum::write_table(std::cout, rows, title_for(config));
      if (table_flags.out.empty()) std::cout << '\n';
      with_output(table_flags.out, [&](std::ostream& o) { pum::write_records_csv(o, rows); });
    } else if (*sweep) {
      const auto config = finish(sweep_flags);
      const auto series = pum::shape_sweep(config, shape_min, shape_max, samples);
      with_output(sweep_flags.out, [&](std::ostream& o) { pum::write_sweep_csv(o, series); });
    } else if (*field) {
      const auto config = finish(field_flags);
      const pum::Experiment experiment(config);
      const auto result = experiment.run();
      pum::export_error_field(result, field_flags.out);
      pum::write_table(std::cout, std::span(&result.record, 1), title_for(config));
    }
  } catch (const pum::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const pum::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const pum::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumeric;
  }
  return kOk;
}
