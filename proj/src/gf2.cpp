#include "guessdec/gf2.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace guessdec {

std::pair<BinMatrix, std::vector<std::size_t>> to_systematic(const BinMatrix& h) {
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  if (m >= n) throw DegenerateCodeError("to_systematic: need n-k < n");
  const std::size_t k = n - m;

  BinMatrix a = h;
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) perm[j] = j;

  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t r = 0; r < m; ++r) {
      bool b1 = a.get(r, c1), b2 = a.get(r, c2);
      a.set(r, c1, b2);
      a.set(r, c2, b1);
    }
    std::swap(perm[c1], perm[c2]);
  };

  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t pc = k + r;  // pivot column for row r
    // Find a pivot row in the target column.
    std::size_t pr = m;
    for (std::size_t i = r; i < m; ++i)
      if (a.get(i, pc)) {
        pr = i;
        break;
      }
    if (pr == m) {
      // Target column is dependent; swap in an earlier column, preferring
      // the information block (searched right to left), then later columns.
      std::size_t repl = n;
      for (std::size_t j = k; j-- > 0;) {
        for (std::size_t i = r; i < m; ++i)
          if (a.get(i, j)) {
            repl = j;
            break;
          }
        if (repl != n) break;
      }
      if (repl == n) {
        for (std::size_t j = pc + 1; j < n; ++j) {
          for (std::size_t i = r; i < m; ++i)
            if (a.get(i, j)) {
              repl = j;
              break;
            }
          if (repl != n) break;
        }
      }
      if (repl == n) throw DegenerateCodeError("to_systematic: parity-check matrix is rank deficient");
      swap_cols(pc, repl);
      for (std::size_t i = r; i < m; ++i)
        if (a.get(i, pc)) {
          pr = i;
          break;
        }
    }
    if (pr != r) std::swap(a.row(pr), a.row(r));
    for (std::size_t i = 0; i < m; ++i)
      if (i != r && a.get(i, pc)) a.row(i) ^= a.row(r);
  }

  BinMatrix p(m, k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j < k; ++j)
      if (a.get(r, j)) p.set(r, j, true);
  return {p, perm};
}

LinearCode::LinearCode(BinMatrix h) : h_(std::move(h)) {
  n_ = h_.cols();
  k_ = n_ - h_.rows();
  if (k_ < 1 || k_ >= n_) throw std::invalid_argument("LinearCode: need 1 <= k < n");
  auto [p, perm] = to_systematic(h_);
  p_ = std::move(p);
  perm_ = std::move(perm);
}

BitVec LinearCode::permute(const BitVec& v) const {
  BitVec out(n_);
  for (std::size_t j = 0; j < n_; ++j)
    if (v.get(perm_[j])) out.set(j, true);
  return out;
}

BitVec LinearCode::unpermute(const BitVec& v) const {
  BitVec out(n_);
  for (std::size_t j = 0; j < n_; ++j)
    if (v.get(j)) out.set(perm_[j], true);
  return out;
}

BitVec LinearCode::encode(const BitVec& message) const {
  if (message.size() != k_) throw std::invalid_argument("encode: message length mismatch");
  BitVec parity = p_.mul_transposed(message);
  BitVec cp(n_);
  for (std::size_t j = 0; j < k_; ++j)
    if (message.get(j)) cp.set(j, true);
  for (std::size_t j = 0; j < n_ - k_; ++j)
    if (parity.get(j)) cp.set(k_ + j, true);
  return unpermute(cp);
}

bool LinearCode::is_codeword(const BitVec& v) const {
  return h_.mul_transposed(v).popcount() == 0;
}

BitVec syndrome(const LinearCode& code, const BitVec& z, bool systematic) {
  if (z.size() != code.n()) throw std::invalid_argument("syndrome: length mismatch");
  if (!systematic) return code.h_original().mul_transposed(z);
  const BitVec zp = code.permute(z);
  BitVec info(code.k());
  for (std::size_t j = 0; j < code.k(); ++j)
    if (zp.get(j)) info.set(j, true);
  BitVec s = code.p_sub().mul_transposed(info);
  for (std::size_t j = 0; j < code.n() - code.k(); ++j)
    if (zp.get(code.k() + j)) s.flip(j);
  return s;
}

BitVec reencode_parity(const BinMatrix& p_sub, const BitVec& e_info, const BitVec& s) {
  if (e_info.size() != p_sub.cols() || s.size() != p_sub.rows())
    throw std::invalid_argument("reencode_parity: dimension mismatch");
  BitVec out = p_sub.mul_transposed(e_info);
  out ^= s;
  return out;
}

LinearCode random_linear_code(std::size_t n, std::size_t k, uint64_t seed) {
  if (k < 1 || k >= n) throw std::invalid_argument("random_linear_code: need 1 <= k < n");
  std::mt19937_64 eng(seed);
  const std::size_t m = n - k;
  BinMatrix h(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < k; ++j)
      if (eng() & 1u) h.set(r, j, true);
    h.set(r, k + r, true);
  }
  return LinearCode(std::move(h));
}

namespace {

LinearCode load_dense_text(std::istream& in) {
  std::size_t n = 0, k = 0;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("dense-text: missing header line");
  {
    std::istringstream hs(line);
    if (!(hs >> n >> k)) throw ParseError("dense-text: header must be \"n k\"");
  }
  if (k < 1 || k >= n) throw ParseError("dense-text: need 1 <= k < n");
  BinMatrix h(n - k, n);
  for (std::size_t r = 0; r < n - k; ++r) {
    if (!std::getline(in, line)) throw ParseError("dense-text: missing row " + std::to_string(r + 1));
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.size() != n)
      throw ParseError("dense-text: row " + std::to_string(r + 1) + " has length " +
                       std::to_string(line.size()) + ", expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (line[j] == '1')
        h.set(r, j, true);
      else if (line[j] != '0')
        throw ParseError("dense-text: row " + std::to_string(r + 1) + " has a non-binary character");
    }
  }
  return LinearCode(std::move(h));
}

LinearCode load_alist(std::istream& in) {
  auto next = [&](const char* what) {
    long v;
    if (!(in >> v)) throw ParseError(std::string("alist: missing ") + what);
    return v;
  };
  const long n = next("column count");
  const long m = next("row count");
  if (n <= 1 || m < 1 || m >= n) throw ParseError("alist: inconsistent dimensions");
  const long dcmax = next("max column degree");
  const long drmax = next("max row degree");
  std::vector<long> dc(n), dr(m);
  for (long j = 0; j < n; ++j) {
    dc[j] = next("column degree");
    if (dc[j] < 0 || dc[j] > dcmax) throw ParseError("alist: column degree out of range");
  }
  for (long r = 0; r < m; ++r) {
    dr[r] = next("row degree");
    if (dr[r] < 0 || dr[r] > drmax) throw ParseError("alist: row degree out of range");
  }
  BinMatrix h(m, n);
  for (long j = 0; j < n; ++j) {
    for (long t = 0; t < dcmax; ++t) {
      const long r = next("column entry");
      if (t < dc[j]) {
        if (r < 1 || r > m) throw ParseError("alist: row index out of range");
        h.set(r - 1, j, true);
      } else if (r != 0) {
        throw ParseError("alist: expected zero padding in column list");
      }
    }
  }
  // Row lists are redundant with the column lists; cross-check them.
  for (long r = 0; r < m; ++r) {
    for (long t = 0; t < drmax; ++t) {
      const long j = next("row entry");
      if (t < dr[r]) {
        if (j < 1 || j > n || !h.get(r, j - 1))
          throw ParseError("alist: row list disagrees with column list");
      } else if (j != 0) {
        throw ParseError("alist: expected zero padding in row list");
      }
    }
  }
  return LinearCode(std::move(h));
}

}  // namespace

LinearCode load_code(const std::string& path, CodeFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("load_code: cannot open " + path);
  return format == CodeFormat::dense_text ? load_dense_text(in) : load_alist(in);
}

std::pair<BitVec, double> brute_force_mld(const LinearCode& code,
                                          const std::vector<double>& lambda) {
  if (lambda.size() != code.n()) throw std::invalid_argument("brute_force_mld: length mismatch");
  if (code.k() > 24) throw std::runtime_error("brute_force_mld: k > 24 exceeds exhaustive-search guard");
  BitVec z(code.n());
  for (std::size_t i = 0; i < lambda.size(); ++i)
    if (lambda[i] < 0) z.set(i, true);

  BitVec best;
  double best_w = std::numeric_limits<double>::infinity();
  BitVec msg(code.k());
  for (uint64_t u = 0; u < (uint64_t{1} << code.k()); ++u) {
    for (std::size_t j = 0; j < code.k(); ++j) msg.set(j, (u >> j) & 1u);
    BitVec v = code.encode(msg);
    double w = 0;
    for (std::size_t i = 0; i < code.n(); ++i)
      if (v.get(i) != z.get(i)) w += std::fabs(lambda[i]);
    if (w < best_w || (w == best_w && v.lex_less(best))) {
      best_w = w;
      best = v;
    }
  }
  return {best, best_w};
}

}  // namespace guessdec
