#pragma once

#include <stdexcept>
#include <string>
#include <vector>

// CSV input/output. Numbers are written with 17 significant digits so that
// write -> read round-trips are lossless.

namespace ad {

struct CsvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SignalTable {
  std::vector<double> t;
  std::vector<double> y;
  double Ts = 0.0;  // asserted-uniform sample spacing
};

SignalTable load_signal_csv(const std::string& path);
void write_signal_csv(const std::string& path, const SignalTable& table);

std::string format_double(double x);  // %.17g

// Generic writer: header row then data rows, all %.17g.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace ad
