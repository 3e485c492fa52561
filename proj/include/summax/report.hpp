#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace summax {

// One row per (experiment, n, q, t, statistic); negative q/t mean
// "not applicable" and print as empty fields.
struct ReportRow {
  std::string experiment;
  std::int64_t n = -1;
  std::int64_t q = -1;
  double t = -1.0;
  std::string statistic;
  double value = 0.0;
  double se = 0.0;
  std::uint64_t seed = 0;
};

struct Verdict {
  std::string name;
  bool pass;
  std::string detail;
};

struct ExperimentReport {
  std::string experiment;
  std::vector<ReportRow> rows;
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, std::string>> metadata;

  bool all_pass() const;
  const ReportRow* find_row(const std::string& statistic, std::int64_t n,
                            std::int64_t q = -1, double t = -1.0) const;
};

void write_csv(const ExperimentReport& report, const std::string& path);
void write_summary_json(const ExperimentReport& report, const std::string& path);
// Raw sample column, one value per line (keeps KS rows recomputable).
void write_raw_column(std::span<const double> values, const std::string& path);

std::string format_double(double v);

}  // namespace summax
