#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace persym {

using word = std::uint64_t;
constexpr std::size_t word_bits = 64;

// 0/1 entries; index 0 holds the first coefficient (alpha_1 at bit 0).
using bitseq = std::vector<std::uint8_t>;

inline bitseq bits_from_word(word w, std::size_t len) {
  bitseq b(len);
  for (std::size_t i = 0; i < len; ++i) b[i] = (w >> i) & 1u;
  return b;
}

inline word word_from_bits(const bitseq& b) {
  if (b.size() > word_bits) throw shape_error("bit sequence longer than 64");
  word w = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) w |= word{1} << i;
  return w;
}

inline word low_mask(std::size_t n) { return n >= word_bits ? ~word{0} : (word{1} << n) - 1; }

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + word_bits - 1) / word_bits), data_(rows * wpr_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static BitMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
    BitMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw shape_error("ragged rows");
      std::size_t j = 0;
      for (int v : row) m.set(i, j++, v & 1);
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t i, std::size_t j) const { return (data_[i * wpr_ + j / word_bits] >> (j % word_bits)) & 1u; }
  void set(std::size_t i, std::size_t j, bool v) {
    word& w = data_[i * wpr_ + j / word_bits];
    word bit = word{1} << (j % word_bits);
    w = v ? (w | bit) : (w & ~bit);
  }

  const word* row(std::size_t i) const { return data_.data() + i * wpr_; }
  word* row(std::size_t i) { return data_.data() + i * wpr_; }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) t.set(j, i, true);
    return t;
  }

  // Rows of `other` appended below this matrix.
  BitMatrix vstack(const BitMatrix& other) const {
    if (other.cols_ != cols_) throw shape_error("vstack: column mismatch");
    BitMatrix r(rows_ + other.rows_, cols_);
    std::copy(data_.begin(), data_.end(), r.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), r.data_.begin() + data_.size());
    return r;
  }

  BitMatrix operator^(const BitMatrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw shape_error("xor: dimension mismatch");
    BitMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] ^= o.data_[i];
    return r;
  }

  bool operator==(const BitMatrix& o) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<word> data_;
};

inline BitMatrix persymmetric_matrix(const bitseq& coeffs, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw shape_error("persymmetric_matrix: empty dimension");
  if (coeffs.size() != rows + cols - 1)
    throw shape_error("persymmetric_matrix: need " + std::to_string(rows + cols - 1) + " coefficients, got " +
                      std::to_string(coeffs.size()));
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (coeffs[i + j] & 1u) m.set(i, j, true);
  return m;
}

inline std::size_t rank(const BitMatrix& mat) {
  BitMatrix a = mat;
  const std::size_t wpr = a.words_per_row();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    const std::size_t wi = c / word_bits;
    const word bit = word{1} << (c % word_bits);
    std::size_t p = r;
    while (p < a.rows() && !(a.row(p)[wi] & bit)) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t w = 0; w < wpr; ++w) std::swap(a.row(p)[w], a.row(r)[w]);
    for (std::size_t q = r + 1; q < a.rows(); ++q)
      if (a.row(q)[wi] & bit)
        for (std::size_t w = wi; w < wpr; ++w) a.row(q)[w] ^= a.row(r)[w];
    ++r;
  }
  return r;
}

inline BitMatrix truncate_columns(const BitMatrix& mat, std::size_t k2) {
  if (k2 == 0 || k2 > mat.cols()) throw shape_error("truncate_columns: width out of range");
  BitMatrix t(mat.rows(), k2);
  for (std::size_t i = 0; i < mat.rows(); ++i)
    for (std::size_t j = 0; j < k2; ++j)
      if (mat.get(i, j)) t.set(i, j, true);
  return t;
}

struct TripleShape {
  int s = 1, m = 0, l = 0, k = 1;

  void validate() const {
    if (s < 1 || m < 0 || l < 0 || k < 1)
      throw shape_error("triple shape needs s>=1, m>=0, l>=0, k>=1 (got s=" + std::to_string(s) +
                        " m=" + std::to_string(m) + " l=" + std::to_string(l) + " k=" + std::to_string(k) + ")");
  }
  int rows1() const { return s; }
  int rows2() const { return s + m; }
  int rows3() const { return s + m + l; }
  int total_rows() const { return 3 * s + 2 * m + l; }
  int max_rank() const { return std::min(k, total_rows()); }
  int alpha_bits() const { return k + s - 1; }
  int beta_bits() const { return k + s + m - 1; }
  int gamma_bits() const { return k + s + m + l - 1; }
  int total_bits() const { return 3 * k + 3 * s + 2 * m + l - 3; }

  bool operator==(const TripleShape&) const = default;
};

// Shape with sorted block sizes a <= b <= c.
inline TripleShape shape_from_blocks(int a, int b, int c, int k) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  TripleShape sh{a, b - a, c - b, k};
  sh.validate();
  return sh;
}

struct CoefficientTriple {
  bitseq alpha, beta, gamma;
};

inline void check_coefficients(const CoefficientTriple& c, const TripleShape& sh) {
  sh.validate();
  if (c.alpha.size() != static_cast<std::size_t>(sh.alpha_bits()) ||
      c.beta.size() != static_cast<std::size_t>(sh.beta_bits()) ||
      c.gamma.size() != static_cast<std::size_t>(sh.gamma_bits()))
    throw shape_error("coefficient lengths do not match shape");
}

inline BitMatrix stack_triple(const CoefficientTriple& c, const TripleShape& sh) {
  check_coefficients(c, sh);
  const auto k = static_cast<std::size_t>(sh.k);
  return persymmetric_matrix(c.alpha, sh.rows1(), k)
      .vstack(persymmetric_matrix(c.beta, sh.rows2(), k))
      .vstack(persymmetric_matrix(c.gamma, sh.rows3(), k));
}

struct MixedShape {
  int n = 0, m = 0, l = 0, k = 1;

  void validate() const {
    if (n < 0 || m < 0 || l < 0 || k < 1)
      throw shape_error("mixed shape needs n>=0, m>=0, l>=0, k>=1");
  }
  int total_rows() const { return n + 2 * m + l + 2; }
  int max_rank() const { return std::min(k, total_rows()); }
  int t_bits() const { return k + m; }
  int eta_bits() const { return k + m + l; }
  int total_bits() const { return n * k + t_bits() + eta_bits(); }

  bool operator==(const MixedShape&) const = default;
};

inline BitMatrix stack_mixed(const BitMatrix& general_rows, const bitseq& t, const bitseq& eta,
                             const MixedShape& ms) {
  ms.validate();
  if (general_rows.rows() != static_cast<std::size_t>(ms.n) ||
      (ms.n > 0 && general_rows.cols() != static_cast<std::size_t>(ms.k)))
    throw shape_error("stack_mixed: general rows must be n x k");
  if (t.size() != static_cast<std::size_t>(ms.t_bits()) || eta.size() != static_cast<std::size_t>(ms.eta_bits()))
    throw shape_error("stack_mixed: t needs k+m bits and eta k+m+l bits");
  const auto k = static_cast<std::size_t>(ms.k);
  BitMatrix blocks = persymmetric_matrix(t, 1 + ms.m, k).vstack(persymmetric_matrix(eta, 1 + ms.m + ms.l, k));
  if (ms.n == 0) return blocks;
  return general_rows.vstack(blocks);
}

// Echelon basis of at most 64-bit vectors: each stored vector is reduced
// against the pivots inserted before it, so a single forward pass reduces
// any new vector. Used by the enumeration kernels.
struct echelon_basis {
  word vec[word_bits];
  word piv[word_bits];
  int rank = 0;

  bool insert(word v) {
    for (int i = 0; i < rank; ++i)
      if (v & piv[i]) v ^= vec[i];
    if (!v) return false;
    vec[rank] = v;
    piv[rank] = word{1} << (63 - std::countl_zero(v));
    ++rank;
    return true;
  }

  void assign(const echelon_basis& o) {
    rank = o.rank;
    std::copy(o.vec, o.vec + rank, vec);
    std::copy(o.piv, o.piv + rank, piv);
  }
};

}  // namespace persym
