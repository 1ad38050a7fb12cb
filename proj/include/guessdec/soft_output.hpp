#ifndef GUESSDEC_SOFT_OUTPUT_HPP
#define GUESSDEC_SOFT_OUTPUT_HPP

#include <utility>
#include <vector>

#include "guessdec/decoder.hpp"

namespace guessdec {

struct SoftOutput {
  std::vector<std::pair<BitVec, double>> block_posteriors;  // (codeword, posterior)
  std::vector<double> bit_llrs;
  double residual = 0;  // probability mass assigned to no listed codeword
};

/// Channel probability P(e | y) of a full-length pattern.
double pattern_probability(const BitVec& pattern, const std::vector<double>& reliabilities);

/// Block posteriors from a GRAND run: visited patterns (with channel
/// probabilities) and the 1-based indices of the membership hits. The
/// unseen mass beyond the last hit is spread over the (2^k - 1) remaining
/// codewords out of (2^n - 1) untested patterns; bit LLRs split the
/// residual mass evenly between 0 and 1.
SoftOutput grand_soft_output(const std::vector<VisitedPattern>& visited,
                             const std::vector<uint64_t>& hits, const ReceivedWord& received,
                             std::size_t n, std::size_t k);

/// Block posteriors from a GCD run over the first L information patterns
/// (given in systematic coordinates, full re-encoded TEPs). Each pattern's
/// weight is the marginal probability of its information part.
SoftOutput gcd_soft_output(const LinearCode& code, const ReceivedWord& received,
                           const std::vector<BitVec>& full_teps_systematic);

}  // namespace guessdec

#endif
