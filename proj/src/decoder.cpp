#include "guessdec/decoder.hpp"

#include <cmath>
#include <limits>

namespace guessdec {

double dai_tau(const std::vector<double>& parity_reliabilities) {
  double tau = 0;
  for (double r : parity_reliabilities) {
    if (r < 0) throw std::invalid_argument("dai_tau: reliabilities must be nonnegative");
    tau += r / (1.0 + std::exp(r));
  }
  return tau;
}

StopRule make_dai_rule(const LinearCode& code, const ReceivedWord& received) {
  std::vector<double> lp(code.n() - code.k());
  for (std::size_t j = 0; j < lp.size(); ++j)
    lp[j] = received.reliabilities[code.col_perm()[code.k() + j]];
  return StopRule::dai(dai_tau(lp));
}

namespace {

// log P(e = 0 | y) = -sum_i log(1 + e^{-|lambda_i|}); P(e|y) then decays by
// e^{-Gamma_S(e)} from this base.
double log_base_prob(const std::vector<double>& reliabilities) {
  double c = 0;
  for (double r : reliabilities) c -= std::log1p(std::exp(-r));
  return c;
}

bool matches_syndrome(const BinMatrix& h, const BitVec& e, const BitVec& s) {
  for (std::size_t r = 0; r < h.rows(); ++r)
    if (h.row(r).dot(e) != s.get(r)) return false;
  return true;
}

}  // namespace

DecodeOutcome grand(const LinearCode& code, const ReceivedWord& received, PatternOrder order,
                    uint64_t l_max, const SoftCollect* soft) {
  if (l_max < 1) throw std::invalid_argument("grand: l_max must be >= 1");
  const BitVec s = syndrome(code, received.z, false);
  const BinMatrix& h = code.h_original();

  DecodeOutcome out;
  out.codeword_hat = received.z;
  const double log_base = soft ? log_base_prob(received.reliabilities) : 0;

  PatternStream stream(order, received.reliabilities);
  for (uint64_t l = 1; l <= l_max; ++l) {
    auto tep = stream.next();
    if (!tep) break;  // all 2^n patterns tried
    out.queries_used = l;
    const bool hit = matches_syndrome(h, tep->bits, s);
    if (soft) {
      out.visited.push_back({tep->bits, std::exp(log_base - tep->gamma_s)});
      if (hit) out.hits.push_back(l);
    }
    if (hit && !out.found) {
      out.found = true;
      out.codeword_hat = received.z ^ tep->bits;
      out.tep_soft_weight = tep->gamma_s;
      out.ml_certified = (order == PatternOrder::soft);
      if (!soft) return out;
    }
    if (soft && out.hits.size() >= soft->max_hits) return out;
  }
  out.budget_exhausted = !out.found;
  return out;
}

DecodeOutcome gcd(const LinearCode& code, const ReceivedWord& received, PatternOrder order,
                  uint64_t l_max, const StopRule& stop, std::size_t soft_list) {
  if (l_max < 1) throw std::invalid_argument("gcd: l_max must be >= 1");
  if (stop.kind == StopKind::membership)
    throw std::invalid_argument("gcd: membership stop applies to GRAND only");
  const std::size_t n = code.n(), k = code.k();
  const BitVec s = syndrome(code, received.z, true);
  const BitVec zp = code.permute(received.z);

  std::vector<double> rel_perm(n);
  for (std::size_t j = 0; j < n; ++j) rel_perm[j] = received.reliabilities[code.col_perm()[j]];
  std::vector<double> info_rel(rel_perm.begin(), rel_perm.begin() + k);

  DecodeOutcome out;
  const double log_base = soft_list ? log_base_prob(info_rel) : 0;

  BitVec e_opt(n);
  double gamma_opt = std::numeric_limits<double>::infinity();
  bool stopped = false;

  PatternStream stream(order, info_rel);
  for (uint64_t l = 1; l <= l_max; ++l) {
    auto tep = stream.next();
    if (!tep) {
      out.ml_certified = true;  // every information pattern was examined
      stopped = true;
      break;
    }
    out.queries_used = l;
    if (out.found &&
        ((stop.kind == StopKind::trivial && gamma_opt <= tep->gamma_s) ||
         (stop.kind == StopKind::dai && gamma_opt <= tep->gamma_s + stop.dai_tau))) {
      out.ml_certified = (stop.kind == StopKind::trivial && order == PatternOrder::soft);
      stopped = true;
      break;
    }
    const BitVec e_p = reencode_parity(code.p_sub(), tep->bits, s);
    double gamma = tep->gamma_s;
    for (std::size_t j = 0; j < n - k; ++j)
      if (e_p.get(j)) gamma += rel_perm[k + j];
    if (soft_list && out.visited.size() < soft_list) {
      BitVec full(n);
      for (std::size_t j = 0; j < k; ++j)
        if (tep->bits.get(j)) full.set(j, true);
      for (std::size_t j = 0; j < n - k; ++j)
        if (e_p.get(j)) full.set(k + j, true);
      out.visited.push_back({full, std::exp(log_base - tep->gamma_s)});
      out.hits.push_back(out.visited.size());
    }
    if (gamma < gamma_opt) {
      gamma_opt = gamma;
      e_opt = BitVec(n);
      for (std::size_t j = 0; j < k; ++j)
        if (tep->bits.get(j)) e_opt.set(j, true);
      for (std::size_t j = 0; j < n - k; ++j)
        if (e_p.get(j)) e_opt.set(k + j, true);
      out.found = true;
    }
  }
  out.budget_exhausted = !stopped;
  out.codeword_hat = received.z ^ code.unpermute(e_opt);
  out.tep_soft_weight = gamma_opt;
  return out;
}

}  // namespace guessdec
