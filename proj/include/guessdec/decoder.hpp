#ifndef GUESSDEC_DECODER_HPP
#define GUESSDEC_DECODER_HPP

#include <cstdint>
#include <vector>

#include "guessdec/channel.hpp"
#include "guessdec/gf2.hpp"
#include "guessdec/patterns.hpp"

namespace guessdec {

enum class StopKind { membership, trivial, dai, budget_only };

struct StopRule {
  StopKind kind = StopKind::trivial;
  double dai_tau = 0;  // used when kind == dai

  static StopRule membership() { return {StopKind::membership, 0}; }
  static StopRule trivial() { return {StopKind::trivial, 0}; }
  static StopRule dai(double tau) {
    if (tau < 0) throw std::invalid_argument("StopRule: dai_tau must be >= 0");
    return {StopKind::dai, tau};
  }
  static StopRule budget_only() { return {StopKind::budget_only, 0}; }
};

/// Expected parity-part soft weight: sum |lambda_i| / (1 + e^{|lambda_i|})
/// over the parity positions.
double dai_tau(const std::vector<double>& parity_reliabilities);

/// One visited pattern and its channel probability P(e | y), recorded when
/// soft output is requested.
struct VisitedPattern {
  BitVec pattern;
  double prob;
};

struct DecodeOutcome {
  BitVec codeword_hat;
  uint64_t queries_used = 0;
  bool found = false;         // a candidate was produced before budget exhaustion
  double tep_soft_weight = 0; // soft weight of the delivered TEP
  bool ml_certified = false;  // the ML stopping condition was met
  bool budget_exhausted = false;

  // populated only when soft output is collected
  std::vector<VisitedPattern> visited;
  std::vector<uint64_t> hits;  // 1-based indices into visited
};

struct SoftCollect {
  std::size_t max_hits = 4;  // GRAND keeps guessing until this many codewords are found
};

DecodeOutcome grand(const LinearCode& code, const ReceivedWord& received, PatternOrder order,
                    uint64_t l_max, const SoftCollect* soft = nullptr);

DecodeOutcome gcd(const LinearCode& code, const ReceivedWord& received, PatternOrder order,
                  uint64_t l_max, const StopRule& stop, std::size_t soft_list = 0);

/// DAI stop rule with tau computed from the received word's parity
/// reliabilities (in systematic coordinates).
StopRule make_dai_rule(const LinearCode& code, const ReceivedWord& received);

}  // namespace guessdec

#endif
