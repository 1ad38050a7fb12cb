#include "guessdec/channel.hpp"

namespace guessdec {

ReceivedWord received_from_llrs(std::vector<double> lambda) {
  ReceivedWord rw;
  rw.z = BitVec(lambda.size());
  rw.reliabilities.resize(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) rw.z.set(i, true);
    rw.reliabilities[i] = std::fabs(lambda[i]);
  }
  rw.lambda = std::move(lambda);
  return rw;
}

ReceivedWord simulate_transmission(const ChannelSpec& spec, const BitVec& codeword, Rng& rng) {
  const std::size_t n = codeword.size();
  std::vector<double> lambda(n);
  if (spec.kind == ChannelKind::awgn) {
    const double sigma2 = spec.awgn_sigma2();
    const double sigma = std::sqrt(sigma2);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = codeword.get(i) ? -1.0 : 1.0;
      const double y = x + sigma * rng.gaussian();
      lambda[i] = 2.0 * y / sigma2;
    }
  } else {
    const double mag = std::log((1.0 - spec.p) / spec.p);
    for (std::size_t i = 0; i < n; ++i) {
      bool bit = codeword.get(i);
      if (rng.uniform() < spec.p) bit = !bit;
      lambda[i] = bit ? -mag : mag;
    }
  }
  return received_from_llrs(std::move(lambda));
}

BitVec true_tep(const BitVec& codeword, const ReceivedWord& received) {
  if (codeword.size() != received.z.size()) throw std::invalid_argument("true_tep: length mismatch");
  return codeword ^ received.z;
}

}  // namespace guessdec
