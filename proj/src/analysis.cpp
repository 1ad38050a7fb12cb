#include "guessdec/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "guessdec/gf2.hpp"

namespace guessdec {

namespace {

constexpr double kPi = 3.14159265358979323846;

double cgf(double s, const std::vector<double>& w) {
  double v = 0;
  for (double wi : w) {
    const double x = s * wi;
    // log((1 + e^x)/2) computed without overflow for large |x|
    v += (x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x))) - 0.6931471805599453;
  }
  return v;
}

double cgf1(double s, const std::vector<double>& w) {
  double v = 0;
  for (double wi : w) v += wi / (1.0 + std::exp(-s * wi));
  return v;
}

double cgf2(double s, const std::vector<double>& w) {
  double v = 0;
  for (double wi : w) {
    const double e = std::exp(s * wi);
    const double q = e / ((1.0 + e) * (1.0 + e));
    v += wi * wi * q;
  }
  return v;
}

/// exp(x^2) * erfc(x) for x >= 0, stable for large x.
double erfcx_pos(double x) {
  if (x < 5.0) return std::exp(x * x) * std::erfc(x);
  // asymptotic series: (1 - 1/(2x^2) + 3/(4x^4) - 15/(8x^6)) / (x sqrt(pi))
  const double ix2 = 1.0 / (x * x);
  const double series = 1.0 + ix2 * (-0.5 + ix2 * (0.75 - 1.875 * ix2));
  return series / (x * std::sqrt(kPi));
}

double solve_tilt(const std::vector<double>& w, double t) {
  double lo = -50.0, hi = 0.0;
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (cgf1(mid, w) > t)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

double log_tail_impl(std::vector<double> w, double t);

// Lower tail with ws all equal to span d (lattice case), threshold already
// guaranteed below the mean.
double log_tail_lattice(const std::vector<double>& w, double t, double d) {
  const double t_eff = std::floor(t / d + 1e-12) * d;
  if (t_eff < d) return -static_cast<double>(w.size()) * 0.6931471805599453;  // only the empty pattern
  const double s = solve_tilt(w, t_eff);
  const double k0 = cgf(s, w), k2 = cgf2(s, w);
  return k0 - s * t_eff + std::log(d) - std::log1p(-std::exp(s * d)) -
         0.5 * std::log(2.0 * kPi * k2);
}

double log_tail_continuous(const std::vector<double>& w, double t) {
  const double s = solve_tilt(w, t);
  const double k0 = cgf(s, w), k2 = cgf2(s, w);
  const double x = -s * std::sqrt(0.5 * k2);
  return k0 - s * t + std::log(0.5 * erfcx_pos(x));
}

double log_tail_impl(std::vector<double> w, double t) {
  // drop zero weights: they never move the sum
  std::erase_if(w, [](double x) { return x == 0.0; });
  const std::size_t m = w.size();
  if (t < 0) return -std::numeric_limits<double>::infinity();
  if (m == 0) return 0.0;  // all weights zero: every pattern qualifies

  double total = 0, wmin = w[0], wmax = w[0];
  for (double wi : w) {
    total += wi;
    wmin = std::min(wmin, wi);
    wmax = std::max(wmax, wi);
  }
  if (t >= total) return 0.0;
  if (t < wmin) return -static_cast<double>(m) * 0.6931471805599453;  // exactly 2^-m

  const bool lattice = (wmax - wmin) <= 1e-9 * wmax;
  const double d = wmin;

  if (2 * t >= total) {
    // complementary regime: P[S <= t] = 1 - P[S > t] with S symmetric about total/2
    const double tc = lattice ? total - t - d : total - t;
    double upper;
    if (tc < 0)
      upper = 0.0;
    else if (2 * tc >= total)
      upper = 0.5;  // threshold at the mean
    else
      upper = std::exp(lattice ? log_tail_lattice(w, tc, d) : log_tail_continuous(w, tc));
    return std::log1p(-std::min(upper, 1.0 - 1e-300));
  }
  const double lp = lattice ? log_tail_lattice(w, t, d) : log_tail_continuous(w, t);
  return std::min(lp, 0.0);
}

}  // namespace

double saddlepoint_log_tail(const TailQuery& q) {
  std::vector<double> w = q.weights;
  for (double& wi : w) {
    if (wi < 0) throw std::invalid_argument("saddlepoint_tail: weights must be nonnegative");
  }
  return log_tail_impl(std::move(w), q.threshold);
}

double saddlepoint_tail(const TailQuery& q) { return std::exp(saddlepoint_log_tail(q)); }

QuerySample estimate_query_count(QueryMode mode, const std::vector<double>& lambda,
                                 const BitVec& true_tep, std::size_t n, std::size_t k,
                                 uint64_t lambda_id) {
  if (lambda.size() != n || true_tep.size() != n)
    throw std::invalid_argument("estimate_query_count: length mismatch");
  if (k >= n) throw std::invalid_argument("estimate_query_count: need k < n");

  std::vector<double> rel(n);
  for (std::size_t i = 0; i < n; ++i) rel[i] = std::fabs(lambda[i]);

  double gamma_full = 0, gamma_info = 0, tau = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (true_tep.get(i)) {
      gamma_full += rel[i];
      if (i < k) gamma_info += rel[i];
    }
    if (i >= k) tau += rel[i] / (1.0 + std::exp(rel[i]));
  }

  std::size_t m = n;
  double t = gamma_full;
  switch (mode) {
    case QueryMode::grand:
    case QueryMode::grand_rank:
      break;
    case QueryMode::gcd_trivial:
      m = k;
      break;
    case QueryMode::gcd_dai:
      m = k;
      t = gamma_full - tau;
      break;
    case QueryMode::gcd_rank:
      m = k;
      t = gamma_info;
      break;
  }

  TailQuery q{std::vector<double>(rel.begin(), rel.begin() + m), t};
  const double logp = saddlepoint_log_tail(q);
  QuerySample out;
  out.lambda_id = lambda_id;
  out.log_estimate = static_cast<double>(m) * 0.6931471805599453 + logp;
  out.estimate = std::exp(out.log_estimate);
  return out;
}

std::pair<boost::multiprecision::cpp_int, boost::multiprecision::cpp_int> bsc_exact_counts(
    std::size_t n, std::size_t k, std::size_t w) {
  if (w > n) throw std::invalid_argument("bsc_exact_counts: w > n");
  using boost::multiprecision::cpp_int;
  auto partial_sum = [](std::size_t m, std::size_t w) {
    cpp_int total = 0, binom = 1;
    for (std::size_t j = 0; j <= std::min(w, m); ++j) {
      total += binom;
      binom = binom * (m - j) / (j + 1);
    }
    return total;
  };
  return {partial_sum(n, w), partial_sum(k, w)};
}

double rcu_bound(std::size_t n, std::size_t k, const ChannelSpec& spec,
                 std::size_t num_lambda_samples, uint64_t seed) {
  if (num_lambda_samples < 1) throw std::invalid_argument("rcu_bound: need samples >= 1");
  const double log_codewords = std::log(std::exp2(static_cast<double>(k)) - 1.0);
  const double self_mass = std::exp2(-static_cast<double>(n));  // the true pattern's own weight
  std::vector<double> terms(num_lambda_samples);
  const BitVec zero_cw(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(num_lambda_samples); ++i) {
    Rng rng(derive_seed(seed, 0x52435531, static_cast<uint64_t>(i)));
    const ReceivedWord rw = simulate_transmission(spec, zero_cw, rng);
    double gamma = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (rw.z.get(j)) gamma += rw.reliabilities[j];
    const double logp = saddlepoint_log_tail({rw.reliabilities, gamma});
    // a competitor tied with the true pattern itself is not an error event
    const double p = std::max(0.0, std::exp(logp) - self_mass);
    terms[i] = p > 0 ? std::exp(std::min(0.0, log_codewords + std::log(p))) : 0.0;
  }
  double acc = 0;
  for (double t : terms) acc += t;
  return acc / static_cast<double>(num_lambda_samples);
}

double grand_query_lower_bound(std::size_t n, std::size_t k, double epsilon_rcu) {
  if (epsilon_rcu < 0 || epsilon_rcu > 1)
    throw std::invalid_argument("grand_query_lower_bound: epsilon must be in [0,1]");
  return std::exp2(static_cast<double>(n - k)) * epsilon_rcu;
}

double ops_model(DecoderKind decoder, double avg_queries, std::size_t n, std::size_t k) {
  if (avg_queries < 0) throw std::invalid_argument("ops_model: avg_queries must be >= 0");
  const double nn = static_cast<double>(n), kk = static_cast<double>(k);
  if (decoder == DecoderKind::grand)
    return (avg_queries - 1.0) * 2.0 * (2.0 * nn - 1.0) + (nn - kk) * (2.0 * nn - 1.0);
  return avg_queries * (nn - kk) * (2.0 * kk - 1.0);
}

BudgetReport min_required_budget(const std::vector<QuerySample>& samples, double alpha,
                                 double epsilon_target) {
  if (samples.empty()) throw std::invalid_argument("min_required_budget: empty sample set");
  if (alpha <= 0 || alpha > 1) throw std::invalid_argument("min_required_budget: alpha in (0,1]");
  const double ae = alpha * epsilon_target;
  const double nd = static_cast<double>(samples.size());
  if (ae * nd < 1.0)
    throw InsufficientResolution(
        "min_required_budget: alpha*epsilon below 1/|samples|; need at least " +
        std::to_string(static_cast<uint64_t>(std::ceil(1.0 / ae))) + " samples");

  std::vector<double> est(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) est[i] = samples[i].estimate;
  std::sort(est.begin(), est.end(), std::greater<>());
  const std::size_t allowed = static_cast<std::size_t>(std::floor(ae * nd));
  // smallest integer budget with at most `allowed` exceedances
  const double threshold = est[std::min(allowed, est.size() - 1)];
  BudgetReport rep;
  rep.l_tilde_max = std::ceil(threshold);
  rep.alpha = alpha;
  rep.epsilon_target = epsilon_target;
  std::size_t over = 0;
  for (double e : est)
    if (e > rep.l_tilde_max) ++over;
  rep.tail_at_budget = static_cast<double>(over) / nd;
  return rep;
}

double tail_exceed_fraction(const std::vector<QuerySample>& samples, double budget) {
  if (samples.empty()) throw std::invalid_argument("tail_exceed_fraction: empty sample set");
  std::size_t over = 0;
  for (const auto& s : samples)
    if (s.estimate > budget) ++over;
  return static_cast<double>(over) / static_cast<double>(samples.size());
}

double fer_gap_bound(double tail_probability) {
  if (tail_probability < 0 || tail_probability > 1)
    throw std::invalid_argument("fer_gap_bound: input must be in [0,1]");
  return tail_probability;
}

}  // namespace guessdec
