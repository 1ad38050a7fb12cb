#ifndef GUESSDEC_PATTERNS_HPP
#define GUESSDEC_PATTERNS_HPP

#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "guessdec/bitvec.hpp"

namespace guessdec {

/// A candidate error pattern with its cached weights.
struct Tep {
  BitVec bits;
  uint64_t gamma_h = 0;  // Hamming weight
  double gamma_s = 0;    // soft weight: sum of |lambda_i| over flipped bits
  uint64_t gamma_l = 0;  // logistic weight: sum of reliability ranks over flipped bits
};

/// ranks[i] in 1..m; rank 1 is the least reliable position, ties broken by
/// ascending position index.
struct RankMap {
  std::vector<uint32_t> ranks;
};

RankMap rank_map(const std::vector<double>& reliabilities);

std::tuple<uint64_t, double, uint64_t> compute_weights(const BitVec& bits,
                                                       const std::vector<double>& reliabilities,
                                                       const RankMap& ranks);

enum class PatternOrder { hamming, soft, orb };

/// Thrown when a stream's internal frontier exceeds its configured cap.
struct FrontierOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Single-consumer iterator emitting every length-m pattern exactly once,
/// with the governing weight (Hamming, soft, or logistic) non-decreasing.
///
/// soft:    flipping-pattern-tree expansion over a min-heap keyed by soft
///          weight; ties broken by (Hamming weight, lexicographic order in
///          reliability-ascending coordinates).
/// hamming: all weight-w patterns before any weight-(w+1); within a weight
///          class, ascending soft weight, ties lexicographic.
/// orb:     for w = 0, 1, 2, ... enumerate partitions of w into distinct
///          parts <= m (largest part descending, then recursive); parts are
///          reliability ranks.
class PatternStream {
 public:
  PatternStream(PatternOrder order, std::vector<double> reliabilities,
                std::size_t frontier_cap = std::size_t{1} << 20);

  /// Next pattern, or nullopt once all 2^m patterns have been emitted.
  std::optional<Tep> next();

  uint64_t emitted() const { return emitted_; }
  std::size_t length() const { return m_; }

 private:
  using Support = std::vector<uint32_t>;  // 1-based positions, sorted-coordinate space

  Tep make_tep(const Support& support_sorted_coords, double gamma_s) const;
  std::optional<Tep> next_soft();
  std::optional<Tep> next_hamming();
  std::optional<Tep> next_orb();
  void check_frontier(std::size_t size) const;

  PatternOrder order_;
  std::size_t m_;
  std::size_t cap_;
  uint64_t emitted_ = 0;
  bool exhausted_ = false;

  std::vector<double> rel_;          // original order
  std::vector<uint32_t> sort_perm_;  // sort_perm_[j] = original index of j-th least reliable
  std::vector<double> sorted_rel_;

  struct Node {
    double gamma_s;
    Support support;
  };
  struct NodeGreater {
    bool operator()(const Node& a, const Node& b) const;
  };
  std::priority_queue<Node, std::vector<Node>, NodeGreater> heap_;

  // hamming order state
  std::size_t ham_weight_ = 0;
  bool ham_class_open_ = false;
  std::set<Support> ham_visited_;

  // orb order state
  uint64_t orb_weight_ = 0;
  struct OrbFrame {
    uint64_t rem;
    uint32_t p;  // current candidate largest part, counts down
  };
  std::vector<OrbFrame> orb_frames_;
  std::vector<uint32_t> orb_prefix_;
  bool orb_zero_pending_ = true;
};

}  // namespace guessdec

#endif
