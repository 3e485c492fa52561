#include "summax/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace summax {

bool ExperimentReport::all_pass() const {
  for (const Verdict& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

const ReportRow* ExperimentReport::find_row(const std::string& statistic, std::int64_t n,
                                            std::int64_t q, double t) const {
  for (const ReportRow& row : rows) {
    if (row.statistic == statistic && row.n == n && row.q == q && row.t == t) {
      return &row;
    }
  }
  return nullptr;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const ExperimentReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "experiment,n,q,t,statistic,value,se,seed\n";
  for (const ReportRow& row : report.rows) {
    out << row.experiment << ',';
    if (row.n >= 0) out << row.n;
    out << ',';
    if (row.q >= 0) out << row.q;
    out << ',';
    if (row.t >= 0.0) out << format_double(row.t);
    out << ',' << row.statistic << ',' << format_double(row.value) << ','
        << format_double(row.se) << ',' << row.seed << '\n';
  }
}

void write_summary_json(const ExperimentReport& report, const std::string& path) {
  nlohmann::json j;
  j["experiment"] = report.experiment;
  auto verdicts = nlohmann::json::array();
  for (const Verdict& v : report.verdicts) {
    verdicts.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  }
  j["verdicts"] = std::move(verdicts);
  j["all_pass"] = report.all_pass();
  auto meta = nlohmann::json::object();
  for (const auto& [key, value] : report.metadata) meta[key] = value;
  j["metadata"] = std::move(meta);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

void write_raw_column(std::span<const double> values, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (double v : values) out << format_double(v) << '\n';
}

}  // namespace summax
