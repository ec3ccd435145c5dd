#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pum/experiment.hpp"

namespace pum {

// "1.06E-02" style: three significant digits.
std::string format_sci3(double v);

// Full-precision CSV of run records (17 significant digits, LF endings).
void write_records_csv(std::ostream& out, std::span<const RunRecord> records);
// Throws ConfigError naming the line on malformed input.
std::vector<RunRecord> read_records_csv(std::istream& in);

// Aligned text table: n, d, MAE, RMSE, K, time.
void write_table(std::ostream& out, std::span<const RunRecord> records, const std::string& title);

// Two columns: shape, rmse.
void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> sweep);

}  // namespace pum
