#include "guessdec/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace guessdec {

RankMap rank_map(const std::vector<double>& reliabilities) {
  const std::size_t m = reliabilities.size();
  std::vector<uint32_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](uint32_t a, uint32_t b) { return reliabilities[a] < reliabilities[b]; });
  RankMap rm;
  rm.ranks.resize(m);
  for (std::size_t j = 0; j < m; ++j) rm.ranks[idx[j]] = static_cast<uint32_t>(j + 1);
  return rm;
}

std::tuple<uint64_t, double, uint64_t> compute_weights(const BitVec& bits,
                                                       const std::vector<double>& reliabilities,
                                                       const RankMap& ranks) {
  if (bits.size() != reliabilities.size() || bits.size() != ranks.ranks.size())
    throw std::invalid_argument("compute_weights: length mismatch");
  uint64_t gh = 0, gl = 0;
  double gs = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (!bits.get(i)) continue;
    ++gh;
    gs += std::fabs(reliabilities[i]);
    gl += ranks.ranks[i];
  }
  return {gh, gs, gl};
}

namespace {

// Lexicographic order of the induced bit strings (0 before 1 at the first
// differing position). Supports are sorted ascending, so the pattern whose
// first unmatched support element is larger is the smaller string.
bool support_lex_less(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() < b.size();
}

}  // namespace

bool PatternStream::NodeGreater::operator()(const Node& a, const Node& b) const {
  if (a.gamma_s != b.gamma_s) return a.gamma_s > b.gamma_s;
  if (a.support.size() != b.support.size()) return a.support.size() > b.support.size();
  return support_lex_less(b.support, a.support);
}

PatternStream::PatternStream(PatternOrder order, std::vector<double> reliabilities,
                             std::size_t frontier_cap)
    : order_(order), m_(reliabilities.size()), cap_(frontier_cap), rel_(std::move(reliabilities)) {
  for (double& r : rel_) r = std::fabs(r);
  sort_perm_.resize(m_);
  std::iota(sort_perm_.begin(), sort_perm_.end(), 0);
  std::stable_sort(sort_perm_.begin(), sort_perm_.end(),
                   [&](uint32_t a, uint32_t b) { return rel_[a] < rel_[b]; });
  sorted_rel_.resize(m_);
  for (std::size_t j = 0; j < m_; ++j) sorted_rel_[j] = rel_[sort_perm_[j]];

  if (order_ == PatternOrder::soft) {
    heap_.push(Node{0.0, {}});
  }
}

void PatternStream::check_frontier(std::size_t size) const {
  if (size > cap_) throw FrontierOverflow("PatternStream: frontier cap exceeded");
}

Tep PatternStream::make_tep(const Support& support, double gamma_s) const {
  Tep t;
  t.bits = BitVec(m_);
  t.gamma_h = support.size();
  t.gamma_s = gamma_s;
  for (uint32_t p : support) {
    t.bits.set(sort_perm_[p - 1], true);
    t.gamma_l += p;  // rank of sorted position p is p
  }
  return t;
}

std::optional<Tep> PatternStream::next() {
  if (exhausted_) return std::nullopt;
  std::optional<Tep> t;
  switch (order_) {
    case PatternOrder::soft: t = next_soft(); break;
    case PatternOrder::hamming: t = next_hamming(); break;
    case PatternOrder::orb: t = next_orb(); break;
  }
  if (t)
    ++emitted_;
  else
    exhausted_ = true;
  return t;
}

std::optional<Tep> PatternStream::next_soft() {
  if (heap_.empty()) return std::nullopt;
  Node node = heap_.top();
  heap_.pop();
  Tep out = make_tep(node.support, node.gamma_s);
  if (node.support.empty()) {
    if (m_ >= 1) heap_.push(Node{sorted_rel_[0], {1}});
  } else {
    const uint32_t j = node.support.back();
    if (j < m_) {
      // extend: additionally flip position j+1
      Node ext{node.gamma_s + sorted_rel_[j], node.support};
      ext.support.push_back(j + 1);
      heap_.push(std::move(ext));
      // shift: move the flip at j to j+1
      Node shf{node.gamma_s - sorted_rel_[j - 1] + sorted_rel_[j], std::move(node.support)};
      shf.support.back() = j + 1;
      heap_.push(std::move(shf));
    }
  }
  check_frontier(heap_.size());
  return out;
}

std::optional<Tep> PatternStream::next_hamming() {
  while (true) {
    if (ham_weight_ > m_) return std::nullopt;
    if (!ham_class_open_) {
      // seed the weight class with its lightest combination {1..w}
      while (!heap_.empty()) heap_.pop();
      ham_visited_.clear();
      Support seed(ham_weight_);
      std::iota(seed.begin(), seed.end(), 1);
      double gs = 0;
      for (uint32_t p : seed) gs += sorted_rel_[p - 1];
      ham_visited_.insert(seed);
      heap_.push(Node{gs, std::move(seed)});
      ham_class_open_ = true;
    }
    if (heap_.empty()) {
      ham_class_open_ = false;
      ++ham_weight_;
      continue;
    }
    Node node = heap_.top();
    heap_.pop();
    Tep out = make_tep(node.support, node.gamma_s);
    // neighbors: increment any element whose successor slot is free
    for (std::size_t i = 0; i < node.support.size(); ++i) {
      const uint32_t p = node.support[i];
      if (p + 1 > m_) continue;
      if (i + 1 < node.support.size() && node.support[i + 1] == p + 1) continue;
      Support child = node.support;
      child[i] = p + 1;
      if (ham_visited_.insert(child).second) {
        const double gs = node.gamma_s - sorted_rel_[p - 1] + sorted_rel_[p];
        heap_.push(Node{gs, std::move(child)});
      }
    }
    check_frontier(heap_.size() + ham_visited_.size());
    return out;
  }
}

std::optional<Tep> PatternStream::next_orb() {
  if (orb_zero_pending_) {
    orb_zero_pending_ = false;
    orb_weight_ = 1;
    if (m_ >= 1) orb_frames_.push_back({1, 1});
    return make_tep({}, 0.0);
  }
  const uint64_t wmax = static_cast<uint64_t>(m_) * (m_ + 1) / 2;
  while (true) {
    if (orb_frames_.empty()) {
      ++orb_weight_;
      if (orb_weight_ > wmax) return std::nullopt;
      orb_prefix_.clear();
      orb_frames_.push_back(
          {orb_weight_, static_cast<uint32_t>(std::min<uint64_t>(orb_weight_, m_))});
    }
    OrbFrame& f = orb_frames_.back();
    // backtrack when no part can cover the remainder with distinct parts <= p
    if (f.p == 0 || f.rem > static_cast<uint64_t>(f.p) * (f.p + 1) / 2) {
      orb_frames_.pop_back();
      if (!orb_frames_.empty()) {
        orb_prefix_.pop_back();
        --orb_frames_.back().p;
      }
      continue;
    }
    if (static_cast<uint64_t>(f.p) == f.rem) {
      Support parts = orb_prefix_;
      parts.push_back(f.p);
      --f.p;
      std::sort(parts.begin(), parts.end());
      double gs = 0;
      for (uint32_t p : parts) gs += sorted_rel_[p - 1];
      check_frontier(orb_frames_.size());
      return make_tep(parts, gs);
    }
    orb_prefix_.push_back(f.p);
    const uint64_t rem = f.rem - f.p;
    const uint32_t maxp = std::min<uint32_t>(f.p - 1, static_cast<uint32_t>(std::min<uint64_t>(rem, m_)));
    orb_frames_.push_back({rem, maxp});
    check_frontier(orb_frames_.size());
  }
}

}  // namespace guessdec
