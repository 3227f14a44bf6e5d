#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ad/config.hpp"
#include "ad/csv.hpp"

// Closed-loop benchmark runner reproducing the step-response RMSE table,
// plus the single-run entry points used by the CLI.

namespace ad {

// Noise-free BD closed-loop trace: the ground-truth reference output.
std::vector<double> reference_output(const ExperimentConfig& cfg);

ClosedLoopTrace run_pid(const ExperimentConfig& cfg, Method method,
                        std::uint64_t seed, bool withNoise);

// Open-loop differentiation of a measured signal.
// Rows: t, y, dhat, lambda, eigmaxP.
std::vector<std::vector<double>> run_diff(const ExperimentConfig& cfg,
                                          Method method, const SignalTable& in);

struct BenchmarkRun {
  Method method = Method::bd;
  std::uint64_t seed = 0;
  double rmse = 0.0;
  bool failed = false;
  std::string error;
};

struct BenchmarkReport {
  std::vector<BenchmarkRun> runs;  // ordered by (method, seed)
  std::map<std::string, std::vector<double>> rmseByMethod;
};

// Simulates every method x seed pair, scores against the noise-free BD
// reference, and writes report.csv / summary.csv / per-method diagnostics
// into outDir. Work units run in parallel when ADAPTIVE_DIFF_THREADS allows;
// the merge order is deterministic either way.
BenchmarkReport run_benchmark(const ExperimentConfig& cfg,
                              const std::vector<Method>& methods, int seedCount,
                              const std::string& outDir);

}  // namespace ad
