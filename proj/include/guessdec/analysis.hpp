#ifndef GUESSDEC_ANALYSIS_HPP
#define GUESSDEC_ANALYSIS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "guessdec/bitvec.hpp"
#include "guessdec/channel.hpp"

namespace guessdec {

/// Tail event P[sum_i f_i * w_i <= t] with f_i i.i.d. uniform bits.
struct TailQuery {
  std::vector<double> weights;
  double threshold;
};

/// Saddle-point approximation of the lower-tail probability. Equal positive
/// weights form a lattice and get the lattice-corrected first-order form
/// (with the threshold snapped down to the lattice); general weights use the
/// tilted erfc form. Computed in log space.
double saddlepoint_tail(const TailQuery& q);
double saddlepoint_log_tail(const TailQuery& q);

enum class QueryMode { grand, gcd_trivial, gcd_dai, grand_rank, gcd_rank };

struct QuerySample {
  uint64_t lambda_id = 0;
  double estimate = 0;
  double log_estimate = 0;  // natural log, valid when estimate > 0
};

/// Estimated query count (list size) for one LLR realization. For the gcd
/// modes, lambda and true_tep must be in systematic coordinates with the k
/// information positions first.
QuerySample estimate_query_count(QueryMode mode, const std::vector<double>& lambda,
                                 const BitVec& true_tep, std::size_t n, std::size_t k,
                                 uint64_t lambda_id = 0);

/// Exact BSC guess counts: (sum_{j<=w} C(n,j), sum_{j<=w} C(k,j)).
std::pair<boost::multiprecision::cpp_int, boost::multiprecision::cpp_int> bsc_exact_counts(
    std::size_t n, std::size_t k, std::size_t w);

/// Monte-Carlo RCU bound: E[min{1, (2^k - 1) P[Gamma_S(f) <= Gamma_S(e) | lambda]}].
/// Deterministic for a fixed seed, independent of thread count.
double rcu_bound(std::size_t n, std::size_t k, const ChannelSpec& spec,
                 std::size_t num_lambda_samples, uint64_t seed);

/// 2^{n-k} * epsilon_RCU.
double grand_query_lower_bound(std::size_t n, std::size_t k, double epsilon_rcu);

enum class DecoderKind { grand, gcd };

/// Average operation count given the average number of queries.
double ops_model(DecoderKind decoder, double avg_queries, std::size_t n, std::size_t k);

struct BudgetReport {
  double l_tilde_max = 0;
  double alpha = 0;
  double epsilon_target = 0;
  double tail_at_budget = 0;
};

struct InsufficientResolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Smallest integer budget l with empirical P[estimate > l] <= alpha * epsilon.
BudgetReport min_required_budget(const std::vector<QuerySample>& samples, double alpha,
                                 double epsilon_target);

/// Empirical fraction of samples whose estimate exceeds the budget.
double tail_exceed_fraction(const std::vector<QuerySample>& samples, double budget);

/// Upper bound on FER - epsilon_ML; the identity on [0,1], kept as a named
/// quantity so reports label it correctly.
double fer_gap_bound(double tail_probability);

}  // namespace guessdec

#endif
