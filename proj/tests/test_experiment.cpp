#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "pum/error.hpp"
#include "pum/experiment.hpp"
#include "pum/report.hpp"

using namespace pum;

namespace {

ExperimentConfig config_for(std::size_t dim, const std::string& domain, std::size_t k) {
  ExperimentConfig c;
  c.dim = dim;
  c.domain = domain;
  c.k_level = k;
  c.threads = 1;
  return c;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "pum_test_experiment";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(ExperimentConfig{}.validate());
  auto bad = [](auto mutate) {
    ExperimentConfig c;
    mutate(c);
    return c;
  };
  CHECK_THROWS_AS(bad([](auto& c) { c.dim = 4; }).validate(), ConfigError);
  CHECK_THROWS_AS(bad([](auto& c) { c.dim = 1; }).validate(), ConfigError);
  CHECK_THROWS_AS(bad([](auto& c) { c.k_level = 0; }).validate(), ConfigError);
  CHECK_THROWS_AS(bad([](auto& c) { c.k_level = 6; }).validate(), ConfigError);
  CHECK_THROWS_AS(bad([](auto& c) { c.n = 0; }).validate(), ConfigError);
  CHECK_THROWS_AS(bad([](auto& c) { c.shape = 0.0; }).validate(), ConfigError);
  CHECK_THROWS_AS(bad([](auto& c) { c.shape = NAN; }).validate(), ConfigError);
  CHECK_THROWS_AS(bad([](auto& c) { c.eval_per_axis = 1; }).validate(), ConfigError);
  CHECK_THROWS_AS(bad([](auto& c) { c.radius_scale = -1.0; }).validate(), ConfigError);
  CHECK_THROWS_AS(bad([](auto& c) { c.jitter = -1e-3; }).validate(), ConfigError);
}

TEST_CASE("dataset sizes") {
  CHECK(generate_dataset(config_for(2, "disk", 4)).points.size() == 1257);
  CHECK(generate_dataset(config_for(3, "pyramid", 2)).points.size() == 2670);
  const auto cube = generate_dataset(config_for(2, "cube", 1));
  CHECK(cube.points.size() == 100);
  CHECK(cube.candidates == 100);
  CHECK(cube.fraction == 1.0);

  auto exact = config_for(2, "triangle", 1);
  exact.n = 333;
  const auto data = generate_dataset(exact);
  CHECK(data.points.size() == 333);
  CHECK(data.values.size() == 333);
  CHECK(data.fraction == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("hull domains") {
  const auto path = scratch("tri.txt");
  {
    std::ofstream out(path);
    out << "2 3\n0 -1 0\n-2 1 0\n2 1 2\n";
  }
  auto config = config_for(2, "hull:" + path.string(), 4);
  CHECK(generate_dataset(config).points.size() == 805);
  config.dim = 3;
  CHECK_THROWS_AS(generate_dataset(config), ConfigError);
  config.dim = 2;
  config.domain = "hull:" + scratch("missing.txt").string();
  CHECK_THROWS_AS(generate_dataset(config), IoError);
  CHECK_THROWS_AS(generate_dataset(config_for(2, "ellipse", 1)), ConfigError);
}

TEST_CASE("constant data is reproduced by a full run") {
  auto config = config_for(2, "disk", 3);
  config.constant_data = true;
  const auto record = run_experiment(config);
  CHECK(record.mae <= 1e-2);
  CHECK(record.empty_count == 0);
  CHECK(record.uncovered_count == 0);
}

TEST_CASE("runs are deterministic apart from timings") {
  const auto config = config_for(2, "hexagon", 3);
  const auto a = run_experiment(config);
  auto parallel = config;
  parallel.threads = 3;
  const auto b = run_experiment(parallel);
  CHECK(a.n == b.n);
  CHECK(a.d == b.d);
  CHECK(a.D == b.D);
  CHECK(a.K == b.K);
  CHECK(a.mae == b.mae);
  CHECK(a.rmse == b.rmse);
  CHECK(a.s == b.s);
}

TEST_CASE("record fields for the disk at k = 4") {
  const auto r = run_experiment(config_for(2, "disk", 4));
  CHECK(r.n == 1257);
  CHECK(r.D == 196);
  CHECK(r.radius == doctest::Approx(std::sqrt(2.0) / 14));
  CHECK(r.shape == 0.1);
  CHECK(r.s > 1200);
  CHECK(r.s < 1300);
  CHECK(r.rmse <= r.mae);
  CHECK(r.K >= 1);
  CHECK(r.timings.total_ms() >= 0.0);
}

TEST_CASE("run record CSV round trip") {
  auto config = config_for(2, "triangle", 2);
  const std::vector<RunRecord> records = {run_experiment(config),
                                          run_experiment(config_for(2, "disk", 1))};
  std::stringstream buffer;
  write_records_csv(buffer, records);
  const auto back = read_records_csv(buffer);
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].n == records[i].n);
    CHECK(back[i].d == records[i].d);
    CHECK(back[i].radius == records[i].radius);
    CHECK(back[i].mae == records[i].mae);
    CHECK(back[i].rmse == records[i].rmse);
    CHECK(back[i].K == records[i].K);
    CHECK(back[i].timings.assemble_ms == records[i].timings.assemble_ms);
  }

  std::istringstream wrong_header("a,b\n");
  CHECK_THROWS_AS(read_records_csv(wrong_header), ConfigError);
  std::stringstream truncated;
  write_records_csv(truncated, records);
  std::string text = truncated.str();
  text += "1,2,3\n";
  std::istringstream bad(text);
  try {
    read_records_csv(bad);
    FAIL("expected a malformed-line error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("sweep samples") {
  CHECK(sweep_samples(0.5, 4.0, 1) == std::vector{0.5});
  const auto s = sweep_samples(0.1, 10.0, 3);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == 0.1);
  CHECK(s[1] == doctest::Approx(1.0));
  CHECK(s[2] == 10.0);
  const auto many = sweep_samples(0.1, 3.0, 30);
  for (std::size_t i = 1; i < many.size(); ++i) {
    CHECK(many[i] / many[i - 1] == doctest::Approx(many[1] / many[0]));
  }
  CHECK_THROWS_AS(sweep_samples(0.0, 1.0, 3), ConfigError);
  CHECK_THROWS_AS(sweep_samples(2.0, 1.0, 3), ConfigError);
  CHECK_THROWS_AS(sweep_samples(0.1, 1.0, 0), ConfigError);
}

TEST_CASE("a one-sample sweep equals a single run") {
  const auto config = config_for(2, "disk", 2);
  const auto sweep = shape_sweep(config, 0.1, 0.1, 1);
  REQUIRE(sweep.size() == 1);
  const auto single = run_experiment(config);
  CHECK(sweep[0].shape == 0.1);
  CHECK(sweep[0].record.rmse == single.rmse);
  CHECK(sweep[0].record.mae == single.mae);

  std::ostringstream out;
  write_sweep_csv(out, sweep);
  CHECK(out.str().rfind("shape,rmse\n", 0) == 0);
}

TEST_CASE("error field export") {
  const Experiment experiment(config_for(3, "pyramid", 1));
  const auto result = experiment.run();
  const auto path = scratch("field.csv");
  export_error_field(result, path);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "x1,x2,x3,f,I,abserr");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == result.eval_points.size());
  CHECK(rows == result.record.s);
  CHECK_THROWS_AS(export_error_field(result, "/nonexistent/dir/field.csv"), IoError);
}

TEST_CASE("tables") {
  const auto hexagon = run_table(config_for(2, "hexagon", 1));
  REQUIRE(hexagon.size() == 5);
  const std::size_t expected[] = {76, 300, 678, 1204, 1877};
  for (std::size_t i = 0; i < 5; ++i) CHECK(hexagon[i].n == expected[i]);

  const auto cylinder = run_table(config_for(3, "cylinder", 1), 25000);
  CHECK(cylinder.size() == 3);

  std::ostringstream out;
  write_table(out, hexagon, "hexagon");
  CHECK(out.str().find("hexagon") != std::string::npos);
  CHECK(out.str().find("RMSE") != std::string::npos);
}

TEST_CASE("format_sci3") {
  CHECK(format_sci3(0.010634) == "1.06E-02");
  CHECK(format_sci3(3.51e-5) == "3.51E-05");
  CHECK(format_sci3(0.0) == "0.00E+00");
}
