#ifndef GUESSDEC_BITVEC_HPP
#define GUESSDEC_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace guessdec {

/// Dense bit vector over GF(2), packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  static BitVec from_string(const std::string& s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        v.set(i, true);
      else if (s[i] != '0')
        throw std::invalid_argument("BitVec::from_string: bad character");
    }
    return v;
  }

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool b) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (b)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  /// Inner product over GF(2): parity of the AND of the two vectors.
  bool dot(const BitVec& o) const {
    uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1u;
  }

  bool operator==(const BitVec& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  /// Lexicographic order on the bit string, index 0 first, '0' < '1'.
  bool lex_less(const BitVec& o) const {
    for (std::size_t i = 0; i < n_; ++i) {
      bool a = get(i), b = o.get(i);
      if (a != b) return b;  // a=0, b=1  =>  *this < o
    }
    return false;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace guessdec

#endif
