#include "ad/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <thread>

namespace ad {
namespace {

std::vector<double> command_sequence(const ExperimentConfig& cfg) {
  const long long N = cfg.simN.value_or(0);
  if (N < 1) throw ConfigError("config: missing or invalid sim.N");
  if (!cfg.simR) throw ConfigError("config: missing required key 'sim.r'");
  return std::vector<double>(N, *cfg.simR);
}

NoiseModel noise_model(const ExperimentConfig& cfg, std::uint64_t seed) {
  if (cfg.noiseSegments.empty()) {
    throw ConfigError("config: missing required key 'noise.segments'");
  }
  return NoiseModel{cfg.noiseSegments, seed};
}

int thread_budget() {
  if (const char* env = std::getenv("ADAPTIVE_DIFF_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

std::vector<double> reference_output(const ExperimentConfig& cfg) {
  const std::vector<double> r = command_sequence(cfg);
  const std::vector<double> zero(r.size(), 0.0);
  const LoopSetup setup = make_loop_setup(cfg, Method::bd);
  return simulate_closed_loop(setup, zero, r).y;
}

ClosedLoopTrace run_pid(const ExperimentConfig& cfg, Method method,
                        std::uint64_t seed, bool withNoise) {
  const std::vector<double> r = command_sequence(cfg);
  std::vector<double> noise(r.size(), 0.0);
  if (withNoise) {
    noise = generate_noise(noise_model(cfg, seed), static_cast<long long>(r.size()));
  }
  const LoopSetup setup = make_loop_setup(cfg, method);
  ClosedLoopTrace tr = simulate_closed_loop(setup, noise, r);
  tr.seed = seed;
  return tr;
}

std::vector<std::vector<double>> run_diff(const ExperimentConfig& cfg,
                                          Method method, const SignalTable& in) {
  std::vector<std::vector<double>> rows;
  rows.reserve(in.t.size());
  const double Ts = in.Ts;
  auto emit = [&](size_t k, double dhat, double lambda, double eigMaxP) {
    rows.push_back({in.t[k], in.y[k], dhat, lambda, eigMaxP});
  };
  switch (method) {
    case Method::aise:
    case Method::aiseVrfEr: {
      Aise est(make_aise_config(cfg, Ts, method));
      for (size_t k = 0; k < in.y.size(); ++k) {
        const StepDiagnostics d = est.step(in.y[k]);
        emit(k, d.dHat, d.lambda, d.eigMaxP);
      }
      break;
    }
    case Method::bd:
    case Method::bdMa:
    case Method::bdBw: {
      std::optional<MovingAverage> ma;
      std::optional<IirFilter> bw;
      if (method == Method::bdMa) ma.emplace(cfg.maWindow);
      if (method == Method::bdBw) {
        if (!cfg.bwCutoff) throw ConfigError("config: missing required key 'bw.cutoff'");
        bw.emplace(butterworth_design(cfg.bwOrder, *cfg.bwCutoff));
      }
      double prev = in.y.empty() ? 0.0 : in.y[0];
      for (size_t k = 0; k < in.y.size(); ++k) {
        double d = backward_difference(in.y[k], prev, Ts);
        prev = in.y[k];
        if (ma) d = ma->step(d);
        if (bw) d = bw->step(d);
        emit(k, d, 1.0, 0.0);
      }
      break;
    }
  }
  return rows;
}

BenchmarkReport run_benchmark(const ExperimentConfig& cfg,
                              const std::vector<Method>& methods, int seedCount,
                              const std::string& outDir) {
  if (seedCount < 1) throw ConfigError("benchmark: seed count must be >= 1");
  namespace fs = std::filesystem;
  fs::create_directories(outDir);

  const std::vector<double> yBar = reference_output(cfg);

  struct Unit {
    Method method;
    std::uint64_t seed;
  };
  std::vector<Unit> units;
  for (Method m : methods) {
    for (int s = 0; s < seedCount; ++s) units.push_back({m, static_cast<std::uint64_t>(s)});
  }

  std::vector<BenchmarkRun> runs(units.size());
  std::vector<ClosedLoopTrace> diagTraces(units.size());
  auto work = [&](size_t i) {
    const Unit& u = units[i];
    BenchmarkRun& out = runs[i];
    out.method = u.method;
    out.seed = u.seed;
    try {
      ClosedLoopTrace tr = run_pid(cfg, u.method, u.seed, true);
      out.rmse = rmse(tr.y, yBar);
      if (u.seed == 0 &&
          (u.method == Method::aise || u.method == Method::aiseVrfEr)) {
        diagTraces[i] = std::move(tr);
      }
    } catch (const std::exception& e) {
      out.failed = true;
      out.error = e.what();
    }
  };

  const int nThreads = std::min<int>(thread_budget(), static_cast<int>(units.size()));
  if (nThreads <= 1) {
    for (size_t i = 0; i < units.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < nThreads; ++t) {
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < units.size(); i = next.fetch_add(1)) {
          work(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  BenchmarkReport report;
  report.runs = runs;
  {
    std::vector<std::vector<double>> rows;
    std::ofstream out(fs::path(outDir) / "report.csv");
    out << "method,seed,rmse\n";
    for (const BenchmarkRun& r : runs) {
      out << method_name(r.method) << ',' << r.seed << ',';
      if (r.failed) {
        out << "failed:" << r.error;
      } else {
        out << format_double(r.rmse);
        report.rmseByMethod[method_name(r.method)].push_back(r.rmse);
      }
      out << '\n';
    }
  }
  {
    std::ofstream out(fs::path(outDir) / "summary.csv");
    out << "method,mean,min,max\n";
    for (Method m : methods) {
      const auto it = report.rmseByMethod.find(method_name(m));
      if (it == report.rmseByMethod.end() || it->second.empty()) continue;
      const auto& v = it->second;
      const double mean =
          std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
      const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
      out << method_name(m) << ',' << format_double(mean) << ',' << format_double(*mn)
          << ',' << format_double(*mx) << '\n';
    }
  }
  for (size_t i = 0; i < units.size(); ++i) {
    const ClosedLoopTrace& tr = diagTraces[i];
    if (tr.t.empty()) continue;
    std::vector<std::string> header = {"k", "t", "lambda", "eigmaxP"};
    const long lt = tr.theta.empty() ? 0 : static_cast<long>(tr.theta[0].size());
    for (long j = 0; j < lt; ++j) header.push_back("theta" + std::to_string(j));
    std::vector<std::vector<double>> rows;
    rows.reserve(tr.t.size());
    for (size_t k = 0; k < tr.t.size(); ++k) {
      std::vector<double> row = {static_cast<double>(k), tr.t[k], tr.lambda[k],
                                 tr.eigMaxP[k]};
      for (long j = 0; j < lt; ++j) row.push_back(tr.theta[k](j));
      rows.push_back(std::move(row));
    }
    write_csv((fs::path(outDir) / ("diag_" + method_name(units[i].method) + "_seed0.csv"))
                  .string(),
              header, rows);
  }
  return report;
}

}  // namespace ad
