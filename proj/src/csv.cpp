#include "ad/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ad {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

SignalTable load_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError("csv: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw CsvError("csv: '" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,y") throw CsvError("csv: '" + path + "' must start with header 't,y'");

  SignalTable tab;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw CsvError("csv: '" + path + "' line " + std::to_string(lineno) +
                     ": expected 't,y' row");
    }
    try {
      size_t p1 = 0, p2 = 0;
      const std::string a = line.substr(0, comma);
      const std::string b = line.substr(comma + 1);
      const double t = std::stod(a, &p1);
      const double y = std::stod(b, &p2);
      if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument(line);
      tab.t.push_back(t);
      tab.y.push_back(y);
    } catch (const std::exception&) {
      throw CsvError("csv: '" + path + "' line " + std::to_string(lineno) +
                     ": malformed row '" + line + "'");
    }
  }
  if (tab.t.size() < 2) throw CsvError("csv: '" + path + "' needs at least 2 samples");

  const double Ts = tab.t[1] - tab.t[0];
  if (Ts <= 0.0) throw CsvError("csv: '" + path + "' time column must increase");
  const double scale = std::max(std::fabs(tab.t.back()), 1.0);
  for (size_t i = 1; i < tab.t.size(); ++i) {
    if (std::fabs(tab.t[i] - tab.t[i - 1] - Ts) > 1e-9 * scale) {
      throw CsvError("csv: '" + path + "' non-uniform sampling at row " +
                     std::to_string(i + 2));
    }
  }
  tab.Ts = Ts;
  return tab;
}

void write_signal_csv(const std::string& path, const SignalTable& table) {
  std::vector<std::vector<double>> rows;
  rows.reserve(table.t.size());
  for (size_t i = 0; i < table.t.size(); ++i) rows.push_back({table.t[i], table.y[i]});
  write_csv(path, {"t", "y"}, rows);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw CsvError("csv: cannot write '" + path + "'");
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
  if (!out) throw CsvError("csv: write failure on '" + path + "'");
}

}  // namespace ad
