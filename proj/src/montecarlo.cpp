#include "guessdec/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace guessdec {

const std::vector<std::string> kSimHeader = {
    "point", "frames", "frame_errors", "budget_exhausted", "fer",     "avg_queries",
    "q50",   "q90",    "q99",          "avg_ops",          "seconds"};

const std::vector<std::string> kAnalysisHeader = {
    "rate",     "k",       "snr_db",  "epsilon_rcu",     "lower_bound", "avg_queries_grand",
    "avg_queries_gcd", "ops_grand", "ops_gcd", "ops_lower_bound", "lmax_grand",  "lmax_gcd"};

Table to_table(const std::vector<ReportRow>& rows) {
  Table t;
  t.header = kSimHeader;
  for (const auto& r : rows)
    t.rows.push_back({r.point, static_cast<double>(r.frames), static_cast<double>(r.frame_errors),
                      static_cast<double>(r.budget_exhausted), r.fer, r.avg_queries, r.q50, r.q90,
                      r.q99, r.avg_ops, r.seconds});
  return t;
}

namespace {

constexpr uint64_t kBatch = 4096;

struct TrialResult {
  uint64_t queries = 0;
  bool error = false;
  bool exhausted = false;
};

ChannelSpec point_spec(const SimConfig& config, const LinearCode& code, double point) {
  if (config.channel == ChannelKind::awgn)
    return ChannelSpec::awgn(point,
                             static_cast<double>(code.k()) / static_cast<double>(code.n()));
  return ChannelSpec::bsc(point);
}

TrialResult run_trial(const LinearCode& code, const SimConfig& config, const ChannelSpec& spec,
                      uint64_t trial_seed) {
  Rng rng(trial_seed);
  BitVec msg(code.k());
  for (std::size_t i = 0; i < code.k(); ++i)
    if (rng.raw() >> 63) msg.set(i, true);
  const BitVec cw = code.encode(msg);
  const ReceivedWord rw = simulate_transmission(spec, cw, rng);

  DecodeOutcome out;
  if (config.decoder == DecoderKind::grand) {
    out = grand(code, rw, config.order, config.l_max);
  } else {
    StopRule rule = StopRule::trivial();
    if (config.stop == StopKind::dai)
      rule = make_dai_rule(code, rw);
    else if (config.stop == StopKind::budget_only)
      rule = StopRule::budget_only();
    out = gcd(code, rw, config.order, config.l_max, rule);
  }

  TrialResult res;
  res.queries = out.queries_used;
  res.exhausted = out.budget_exhausted;
  res.error = !out.found || !(out.codeword_hat == cw);
  return res;
}

void validate(const LinearCode& code, const SimConfig& config) {
  if (config.points.empty()) throw std::invalid_argument("run_simulation: no operating points");
  if (config.max_frames < 1) throw std::invalid_argument("run_simulation: max_frames must be >= 1");
  if (config.decoder == DecoderKind::gcd && config.stop == StopKind::membership)
    throw std::invalid_argument("run_simulation: membership stop applies to GRAND only");
  for (double p : config.points)
    if (config.channel == ChannelKind::bsc && !(p > 0 && p < 0.5))
      throw std::invalid_argument("run_simulation: bsc points must lie in (0, 0.5)");
  (void)code;
}

ReportRow finalize_point(const SimConfig& config, const LinearCode& code, double point,
                         std::vector<TrialResult>& trials, double seconds) {
  ReportRow row;
  row.point = point;
  row.frames = trials.size();
  row.seconds = seconds;

  std::vector<uint64_t> queries;
  queries.reserve(trials.size());
  double qsum = 0;
  for (const auto& t : trials) {
    row.frame_errors += t.error;
    row.budget_exhausted += t.exhausted;
    qsum += static_cast<double>(t.queries);
    queries.push_back(t.queries);
  }
  row.fer = static_cast<double>(row.frame_errors) / static_cast<double>(row.frames);
  row.avg_queries = qsum / static_cast<double>(row.frames);
  std::sort(queries.begin(), queries.end());
  auto pct = [&](double p) {
    const std::size_t r =
        static_cast<std::size_t>(std::ceil(p * static_cast<double>(queries.size())));
    return static_cast<double>(queries[std::max<std::size_t>(r, 1) - 1]);
  };
  row.q50 = pct(0.50);
  row.q90 = pct(0.90);
  row.q99 = pct(0.99);
  row.avg_ops = ops_model(config.decoder, row.avg_queries, code.n(), code.k());
  return row;
}

template <bool Parallel>
ReportRow run_point(const LinearCode& code, const SimConfig& config, std::size_t point_idx) {
  const double point = config.points[point_idx];
  const ChannelSpec spec = point_spec(config, code, point);
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<TrialResult> trials;
  trials.reserve(std::min<uint64_t>(config.max_frames, 1u << 20));
  uint64_t errors = 0;
  uint64_t done = 0;
  while (done < config.max_frames && errors < config.min_errors) {
    const uint64_t batch = std::min<uint64_t>(kBatch, config.max_frames - done);
    trials.resize(done + batch);
    if constexpr (Parallel) {
#ifdef _OPENMP
      const int threads = config.workers > 0 ? config.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#endif
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(batch); ++i) {
        const uint64_t t = done + static_cast<uint64_t>(i);
        trials[t] = run_trial(code, config, spec,
                              derive_seed(config.seed, static_cast<uint64_t>(point_idx), t));
      }
    } else {
      for (uint64_t i = 0; i < batch; ++i) {
        const uint64_t t = done + i;
        trials[t] = run_trial(code, config, spec,
                              derive_seed(config.seed, static_cast<uint64_t>(point_idx), t));
      }
    }
    for (uint64_t i = done; i < done + batch; ++i) errors += trials[i].error;
    done += batch;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return finalize_point(config, code, point, trials, seconds);
}

}  // namespace

ReportRow run_point_serial(const LinearCode& code, const SimConfig& config,
                           std::size_t point_idx) {
  validate(code, config);
  return run_point<false>(code, config, point_idx);
}

ReportRow run_point_parallel(const LinearCode& code, const SimConfig& config,
                             std::size_t point_idx) {
  validate(code, config);
  return run_point<true>(code, config, point_idx);
}

std::vector<ReportRow> run_simulation(const LinearCode& code, const SimConfig& config) {
  validate(code, config);
  std::vector<ReportRow> rows;
  for (std::size_t i = 0; i < config.points.size(); ++i)
    rows.push_back(config.workers == 1 ? run_point<false>(code, config, i)
                                       : run_point<true>(code, config, i));
  return rows;
}

double find_snr_for_rcu(std::size_t n, std::size_t k, double target, std::size_t samples,
                        uint64_t seed) {
  const double rate = static_cast<double>(k) / static_cast<double>(n);
  auto eval = [&](double snr) {
    return rcu_bound(n, k, ChannelSpec::awgn(snr, rate), samples, seed);
  };
  double lo = -6.0, hi = 20.0;
  if (eval(lo) <= target) return lo;
  if (eval(hi) >= target) return hi;
  for (int it = 0; it < 40 && hi - lo > 1e-4; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (eval(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Table run_analysis(const AnalysisConfig& config) {
  if (config.rates.empty()) throw std::invalid_argument("run_analysis: no rates");
  if (config.samples < 1) throw std::invalid_argument("run_analysis: need samples >= 1");

  Table t;
  t.header = kAnalysisHeader;
  const double nan = std::nan("");

  for (std::size_t ri = 0; ri < config.rates.size(); ++ri) {
    const double rate = config.rates[ri];
    const std::size_t k =
        static_cast<std::size_t>(std::llround(rate * static_cast<double>(config.n)));
    if (k == 0 || k >= config.n)
      throw std::invalid_argument("run_analysis: rate leaves no information or parity bits");

    const double snr = find_snr_for_rcu(config.n, k, config.epsilon, config.rcu_samples,
                                        derive_seed(config.seed, 0x414e4C, ri));
    const ChannelSpec spec = ChannelSpec::awgn(snr, static_cast<double>(k) /
                                                        static_cast<double>(config.n));
    const double eps = rcu_bound(config.n, k, spec, config.rcu_samples,
                                 derive_seed(config.seed, 0x414e4C, ri));
    // The lower bound is a design-target quantity: it uses the requested
    // epsilon, not the Monte-Carlo re-measurement at the located SNR.
    const double lower = grand_query_lower_bound(config.n, k, config.epsilon);

    // Saddle-point query estimates over fresh LLR draws at the located SNR.
    std::vector<QuerySample> grand_s(config.samples), gcd_s(config.samples),
        grand_rank_s(config.samples), gcd_rank_s(config.samples);
    const BitVec zero_cw(config.n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(config.samples); ++i) {
      Rng rng(derive_seed(config.seed, 0x514e4C00 + ri, static_cast<uint64_t>(i)));
      const ReceivedWord rw = simulate_transmission(spec, zero_cw, rng);
      const uint64_t id = static_cast<uint64_t>(i);
      grand_s[i] = estimate_query_count(QueryMode::grand, rw.lambda, rw.z, config.n, k, id);
      gcd_s[i] = estimate_query_count(QueryMode::gcd_trivial, rw.lambda, rw.z, config.n, k, id);
      grand_rank_s[i] =
          estimate_query_count(QueryMode::grand_rank, rw.lambda, rw.z, config.n, k, id);
      gcd_rank_s[i] = estimate_query_count(QueryMode::gcd_rank, rw.lambda, rw.z, config.n, k, id);
    }
    auto mean = [](const std::vector<QuerySample>& v) {
      double acc = 0;
      for (const auto& s : v) acc += s.estimate;
      return acc / static_cast<double>(v.size());
    };
    const double avg_grand = mean(grand_s), avg_gcd = mean(gcd_s);

    double lmax_grand = nan, lmax_gcd = nan;
    if (config.compute_budget) {
      lmax_grand =
          min_required_budget(grand_rank_s, config.alpha, config.epsilon).l_tilde_max;
      lmax_gcd = min_required_budget(gcd_rank_s, config.alpha, config.epsilon).l_tilde_max;
    }

    t.rows.push_back({rate, static_cast<double>(k), snr, eps, lower, avg_grand, avg_gcd,
                      ops_model(DecoderKind::grand, avg_grand, config.n, k),
                      ops_model(DecoderKind::gcd, avg_gcd, config.n, k),
                      ops_model(DecoderKind::grand, lower, config.n, k), lmax_grand, lmax_gcd});
  }
  return t;
}

}  // namespace guessdec
