#ifndef GUESSDEC_MONTECARLO_HPP
#define GUESSDEC_MONTECARLO_HPP

#include <cstdint>
#include <vector>

#include "guessdec/analysis.hpp"
#include "guessdec/channel.hpp"
#include "guessdec/decoder.hpp"
#include "guessdec/gf2.hpp"
#include "guessdec/report.hpp"

namespace guessdec {

struct SimConfig {
  DecoderKind decoder = DecoderKind::grand;
  PatternOrder order = PatternOrder::soft;
  StopKind stop = StopKind::membership;
  uint64_t l_max = 1000000;
  ChannelKind channel = ChannelKind::awgn;
  std::vector<double> points;  // Eb/N0 grid (dB) for awgn, crossover grid for bsc
  uint64_t max_frames = 1000000;
  uint64_t min_errors = 100;
  uint64_t seed = 1;
  int workers = 0;  // 0 = all available; 1 = serial reference path
};

struct ReportRow {
  double point = 0;
  uint64_t frames = 0;
  uint64_t frame_errors = 0;
  uint64_t budget_exhausted = 0;
  double fer = 0;
  double avg_queries = 0;
  double q50 = 0, q90 = 0, q99 = 0;
  double avg_ops = 0;
  double seconds = 0;
};

extern const std::vector<std::string> kSimHeader;

Table to_table(const std::vector<ReportRow>& rows);

/// Runs one operating point. The serial variant is the reference
/// implementation; the parallel variant distributes trials over OpenMP
/// threads in fixed-size batches with per-trial seeds, so results are
/// bit-identical to the serial path for any worker count.
ReportRow run_point_serial(const LinearCode& code, const SimConfig& config, std::size_t point_idx);
ReportRow run_point_parallel(const LinearCode& code, const SimConfig& config,
                             std::size_t point_idx);

std::vector<ReportRow> run_simulation(const LinearCode& code, const SimConfig& config);

struct AnalysisConfig {
  std::size_t n = 128;
  std::vector<double> rates;
  double epsilon = 1e-5;
  double alpha = 1.0;
  std::size_t samples = 20000;      // LLR draws for the saddle-point averages
  std::size_t rcu_samples = 10000;  // LLR draws per RCU evaluation
  uint64_t seed = 1;
  bool compute_budget = false;      // needs samples >= 1/(alpha*epsilon)
};

extern const std::vector<std::string> kAnalysisHeader;

/// Finds, per rate, the Eb/N0 reaching the target RCU bound, then tabulates
/// lower-bound, saddle-point average-query, budget, and operation columns.
Table run_analysis(const AnalysisConfig& config);

/// Eb/N0 (dB) at which the RCU bound crosses the target, by bisection with
/// common random numbers.
double find_snr_for_rcu(std::size_t n, std::size_t k, double target, std::size_t samples,
                        uint64_t seed);

}  // namespace guessdec

#endif
