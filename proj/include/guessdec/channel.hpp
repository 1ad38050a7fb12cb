#ifndef GUESSDEC_CHANNEL_HPP
#define GUESSDEC_CHANNEL_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "guessdec/bitvec.hpp"

namespace guessdec {

/// Deterministic RNG used for all channel noise. Doubles are built from the
/// top 53 bits of mt19937_64 output; Gaussians come from Box-Muller, so the
/// sample sequence is identical across platforms for a fixed seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t raw() { return eng_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller, one cached value.
  double gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    // u1 in (0, 1] so the log is finite.
    const double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 eng_;
  double cached_ = 0;
  bool has_cached_ = false;
};

/// SplitMix64 step, used to derive independent per-trial seeds.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t master, uint64_t stream, uint64_t index) {
  return splitmix64(splitmix64(master ^ (stream * 0x9e3779b97f4a7c15ull)) + index);
}

enum class ChannelKind { awgn, bsc };

struct ChannelSpec {
  ChannelKind kind;
  double ebn0_db = 0;  // awgn
  double rate = 0;     // awgn code rate, in (0,1)
  double p = 0;        // bsc crossover, in (0, 0.5)

  static ChannelSpec awgn(double ebn0_db, double rate) {
    if (!(rate > 0 && rate < 1)) throw std::invalid_argument("ChannelSpec: rate must be in (0,1)");
    return {ChannelKind::awgn, ebn0_db, rate, 0};
  }
  static ChannelSpec bsc(double p) {
    if (!(p > 0 && p < 0.5)) throw std::invalid_argument("ChannelSpec: p must be in (0, 0.5)");
    return {ChannelKind::bsc, 0, 0, p};
  }

  /// Noise variance per BPSK symbol: 1 / (2 r 10^{Eb/N0 / 10}).
  double awgn_sigma2() const { return 1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0)); }
};

struct ReceivedWord {
  std::vector<double> lambda;        // per-bit LLRs
  BitVec z;                          // hard decisions, z_i = 0 iff lambda_i >= 0
  std::vector<double> reliabilities; // |lambda_i|
};

/// Builds a ReceivedWord from raw LLRs.
ReceivedWord received_from_llrs(std::vector<double> lambda);

ReceivedWord simulate_transmission(const ChannelSpec& spec, const BitVec& codeword, Rng& rng);

/// z XOR codeword.
BitVec true_tep(const BitVec& codeword, const ReceivedWord& received);

}  // namespace guessdec

#endif
