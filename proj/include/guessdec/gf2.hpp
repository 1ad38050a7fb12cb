#ifndef GUESSDEC_GF2_HPP
#define GUESSDEC_GF2_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "guessdec/bitvec.hpp"

namespace guessdec {

/// Dense bit matrix over GF(2), rows stored as BitVec.
class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("BinMatrix: empty dimensions");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool b) { data_[r].set(c, b); }

  const BitVec& row(std::size_t r) const { return data_[r]; }
  BitVec& row(std::size_t r) { return data_[r]; }

  /// y = x * M^T  (x of length cols, y of length rows).
  BitVec mul_transposed(const BitVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BinMatrix: length mismatch");
    BitVec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      if (data_[r].dot(x)) y.set(r, true);
    return y;
  }

  bool operator==(const BinMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BitVec> data_;
};

/// Raised by to_systematic when H does not have full row rank.
struct DegenerateCodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by load_code on malformed input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Row-reduce h to [P | I] using elementary row operations plus a column
/// permutation. perm[j] is the original column index occupying systematic
/// position j; perm is the identity whenever the last n-k columns of h are
/// already linearly independent.
std::pair<BinMatrix, std::vector<std::size_t>> to_systematic(const BinMatrix& h);

/// An [n,k] binary linear block code with original parity-check matrix and
/// a cached systematic form. Immutable after construction.
class LinearCode {
 public:
  /// Builds from a full-row-rank (n-k) x n parity-check matrix.
  explicit LinearCode(BinMatrix h);

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  const BinMatrix& h_original() const { return h_; }
  const BinMatrix& p_sub() const { return p_; }
  const std::vector<std::size_t>& col_perm() const { return perm_; }

  /// Gathers v into systematic coordinates: out[j] = v[perm[j]].
  BitVec permute(const BitVec& v) const;
  /// Scatters a systematic-coordinate vector back: out[perm[j]] = v[j].
  BitVec unpermute(const BitVec& v) const;

  /// Encodes a k-bit message; returns the codeword in original coordinates.
  BitVec encode(const BitVec& message) const;

  bool is_codeword(const BitVec& v) const;

 private:
  std::size_t n_, k_;
  BinMatrix h_;
  BinMatrix p_;
  std::vector<std::size_t> perm_;
};

/// z * H^T. With systematic=true, z is first gathered into systematic
/// coordinates and multiplied by [P | I].
BitVec syndrome(const LinearCode& code, const BitVec& z, bool systematic = false);

/// Parity part of a valid TEP: s XOR e_info * P^T.
BitVec reencode_parity(const BinMatrix& p_sub, const BitVec& e_info, const BitVec& s);

/// Uniformly random systematic code H = [P | I]; deterministic per seed.
LinearCode random_linear_code(std::size_t n, std::size_t k, uint64_t seed);

enum class CodeFormat { dense_text, alist };

LinearCode load_code(const std::string& path, CodeFormat format);

/// Exhaustive ML decoding; returns the minimizing codeword (ties broken by
/// lexicographically smallest codeword) and the soft weight of its TEP.
/// Refuses codes with k > 24.
std::pair<BitVec, double> brute_force_mld(const LinearCode& code,
                                          const std::vector<double>& lambda);

}  // namespace guessdec

#endif
