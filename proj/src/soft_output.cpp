#include "guessdec/soft_output.hpp"

#include <cmath>
#include <stdexcept>

namespace guessdec {

double pattern_probability(const BitVec& pattern, const std::vector<double>& reliabilities) {
  if (pattern.size() != reliabilities.size())
    throw std::invalid_argument("pattern_probability: length mismatch");
  double logp = 0;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const double r = std::fabs(reliabilities[i]);
    logp -= std::log1p(std::exp(-r));
    if (pattern.get(i)) logp -= r;
  }
  return std::exp(logp);
}

namespace {

SoftOutput finalize(std::vector<std::pair<BitVec, double>> codeword_weights, double residual_mass,
                    std::size_t n) {
  double denom = residual_mass;
  for (const auto& [c, w] : codeword_weights) denom += w;
  if (denom <= 0) throw std::runtime_error("soft output: zero total mass");

  SoftOutput out;
  out.block_posteriors.reserve(codeword_weights.size());
  for (auto& [c, w] : codeword_weights) out.block_posteriors.emplace_back(std::move(c), w / denom);
  out.residual = residual_mass / denom;

  out.bit_llrs.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    double p0 = out.residual * 0.5, p1 = out.residual * 0.5;
    for (const auto& [c, post] : out.block_posteriors) (c.get(j) ? p1 : p0) += post;
    out.bit_llrs[j] = std::log(p0) - std::log(p1);
  }
  return out;
}

double uncovered_codeword_fraction(std::size_t n, std::size_t k) {
  return (std::exp2(static_cast<double>(k)) - 1.0) / (std::exp2(static_cast<double>(n)) - 1.0);
}

}  // namespace

SoftOutput grand_soft_output(const std::vector<VisitedPattern>& visited,
                             const std::vector<uint64_t>& hits, const ReceivedWord& received,
                             std::size_t n, std::size_t k) {
  if (hits.empty()) throw std::invalid_argument("grand_soft_output: empty hit list");
  const uint64_t q_last = hits.back();
  if (q_last > visited.size()) throw std::invalid_argument("grand_soft_output: hit index out of range");

  double tested_mass = 0;
  for (uint64_t i = 0; i < q_last; ++i) tested_mass += visited[i].prob;

  std::vector<std::pair<BitVec, double>> cw;
  cw.reserve(hits.size());
  for (uint64_t q : hits)
    cw.emplace_back(received.z ^ visited[q - 1].pattern, visited[q - 1].prob);

  const double residual_mass =
      std::max(0.0, 1.0 - tested_mass) * uncovered_codeword_fraction(n, k);
  return finalize(std::move(cw), residual_mass, n);
}

SoftOutput gcd_soft_output(const LinearCode& code, const ReceivedWord& received,
                           const std::vector<BitVec>& full_teps_systematic) {
  if (full_teps_systematic.empty()) throw std::invalid_argument("gcd_soft_output: empty list");
  const std::size_t n = code.n(), k = code.k();

  std::vector<double> info_rel(k);
  for (std::size_t j = 0; j < k; ++j)
    info_rel[j] = received.reliabilities[code.col_perm()[j]];
  double log_base = 0;
  for (double r : info_rel) log_base -= std::log1p(std::exp(-r));

  std::vector<std::pair<BitVec, double>> cw;
  cw.reserve(full_teps_systematic.size());
  double listed_mass = 0;
  for (const BitVec& e : full_teps_systematic) {
    double gs_info = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (e.get(j)) gs_info += info_rel[j];
    const double p_info = std::exp(log_base - gs_info);
    listed_mass += p_info;
    cw.emplace_back(received.z ^ code.unpermute(e), p_info);
  }
  const double residual_mass =
      std::max(0.0, 1.0 - listed_mass) * uncovered_codeword_fraction(n, k);
  return finalize(std::move(cw), residual_mass, n);
}

}  // namespace guessdec
