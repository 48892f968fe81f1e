#pragma once

// Small exact linear algebra over F_2 (bit packed) and F_p (dense).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "steenrod/arith.hpp"
#include "steenrod/error.hpp"

namespace steenrod {

class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitRow& operator^=(const BitRow& other) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
  }

  friend bool operator==(const BitRow&, const BitRow&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Inverse of a square F_2 matrix given by rows, or nullopt if singular.
inline std::optional<std::vector<BitRow>> f2_inverse(std::vector<BitRow> rows) {
  const std::size_t n = rows.size();
  std::vector<BitRow> inv(n, BitRow(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw PreconditionError("f2_inverse: matrix is not square");
    inv[i].set(i);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !rows[pivot].test(col)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[pivot], rows[col]);
    std::swap(inv[pivot], inv[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && rows[r].test(col)) {
        rows[r] ^= rows[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return inv;
}

/// Dense matrix over F_p, entries kept reduced in [0, p).
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t prime() const noexcept { return p_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * cols_ + c] = v % p_; }

  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const {
    std::vector<std::uint32_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < cols_; ++c) acc += std::uint64_t{(*this)(r, c)} * v[c];
      out[r] = static_cast<std::uint32_t>(acc % p_);
    }
    return out;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

namespace detail {

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<std::uint32_t>>& m, std::size_t cols,
                                     std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pr = row;
    while (pr < m.size() && m[pr][col] == 0) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[pr], m[row]);
    const std::uint32_t inv = inverse_mod(m[row][col], p);
    for (auto& e : m[row]) e = static_cast<std::uint32_t>(std::uint64_t{e} * inv % p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::uint64_t f = m[r][col];
      for (std::size_t c = 0; c < cols; ++c)
        m[r][c] = static_cast<std::uint32_t>((m[r][c] + (p - f) * m[row][c]) % p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// Basis of { v : A v = 0 }.
inline std::vector<std::vector<std::uint32_t>> fp_kernel(const FpMatrix& a) {
  const std::uint32_t p = a.prime();
  std::vector<std::vector<std::uint32_t>> m(a.rows(), std::vector<std::uint32_t>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
  const auto pivots = detail::rref(m, a.cols(), p);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - m[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Whether v lies in the span of the given vectors (all of length v.size()).
inline bool fp_in_span(const std::vector<std::vector<std::uint32_t>>& spanning,
                       const std::vector<std::uint32_t>& v, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> m = spanning;
  const std::size_t before = detail::rref(m, v.size(), p).size();
  m.push_back(v);
  return detail::rref(m, v.size(), p).size() == before;
}

}  // namespace steenrod
