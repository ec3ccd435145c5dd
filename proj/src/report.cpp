#include "pum/report.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "pum/error.hpp"

namespace pum {

namespace {

constexpr const char* kRecordHeader =
    "n,d,D,radius,shape,mae,rmse,s,K,empty_count,uncovered_count,"
    "generate_ms,build_ms,assemble_ms,evaluate_ms";
constexpr std::size_t kRecordFields = 15;

std::string full(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string format_sci3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2E", v);
  return buf;
}

void write_records_csv(std::ostream& out, std::span<const RunRecord> records) {
  out << kRecordHeader << '\n';
  for (const auto& r : records) {
    out << r.n << ',' << r.d << ',' << r.D << ',' << full(r.radius) << ',' << full(r.shape) << ','
        << full(r.mae) << ',' << full(r.rmse) << ',' << r.s << ',' << r.K << ',' << r.empty_count
        << ',' << r.uncovered_count << ',' << full(r.timings.generate_ms) << ','
        << full(r.timings.build_ms) << ',' << full(r.timings.assemble_ms) << ','
        << full(r.timings.evaluate_ms) << '\n';
  }
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line != kRecordHeader) {
    throw ConfigError("run record CSV line 1: unexpected header");
  }
  std::vector<RunRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != kRecordFields) {
      throw ConfigError("run record CSV line " + std::to_string(line_no) + ": expected " +
                        std::to_string(kRecordFields) + " fields");
    }
    std::size_t field = 0;
    auto integer = [&]() {
      const auto& c = cells[field++];
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc() || ptr != c.data() + c.size()) {
        throw ConfigError("run record CSV line " + std::to_string(line_no) + ": bad integer '" +
                          c + "'");
      }
      return v;
    };
    auto real = [&]() {
      const auto& c = cells[field++];
      char* end = nullptr;
      const double v = std::strtod(c.c_str(), &end);
      if (c.empty() || end != c.c_str() + c.size()) {
        throw ConfigError("run record CSV line " + std::to_string(line_no) + ": bad number '" +
                          c + "'");
      }
      return v;
    };
    RunRecord r;
    r.n = integer();
    r.d = integer();
    r.D = integer();
    r.radius = real();
    r.shape = real();
    r.mae = real();
    r.rmse = real();
    r.s = integer();
    r.K = integer();
    r.empty_count = integer();
    r.uncovered_count = integer();
    r.timings.generate_ms = real();
    r.timings.build_ms = real();
    r.timings.assemble_ms = real();
    r.timings.evaluate_ms = real();
    records.push_back(r);
  }
  return records;
}

void write_table(std::ostream& out, std::span<const RunRecord> records, const std::string& title) {
  char buf[160];
  out << title << '\n';
  std::snprintf(buf, sizeof buf, "%8s %6s %10s %10s %4s %10s\n", "n", "d", "MAE", "RMSE", "K",
                "time (s)");
  out << buf;
  for (const auto& r : records) {
    std::snprintf(buf, sizeof buf, "%8zu %6zu %10s %10s %4zu %10.3f\n", r.n, r.d,
                  format_sci3(r.mae).c_str(), format_sci3(r.rmse).c_str(), r.K,
                  r.timings.total_ms() / 1000.0);
    out << buf;
  }
}

void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> sweep) {
  out << "shape,rmse\n";
  for (const auto& p : sweep) out << full(p.shape) << ',' << full(p.record.rmse) << '\n';
}

}  // namespace pum
