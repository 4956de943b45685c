#pragma once

// Dense F2 linear systems, rows bit-packed with the right-hand side
// stored at bit position `unknowns`. Pivoting is leftmost column,
// topmost row; free unknowns are set to zero.

#include <cstdint>
#include <optional>
#include <vector>

namespace arf {

class F2System {
 public:
  explicit F2System(unsigned unknowns) : n_(unknowns), words_((unknowns + 1 + 63) / 64) {}

  unsigned unknowns() const { return n_; }

  // Adds the row "sum of coeffs[j]*x_j = rhs"; coeffs indexed by unknown.
  void add_row(const std::vector<std::uint8_t>& coeffs, bool rhs) {
    std::vector<std::uint64_t> row(words_, 0);
    for (unsigned j = 0; j < n_ && j < coeffs.size(); ++j)
      if (coeffs[j] & 1) row[j / 64] |= std::uint64_t{1} << (j % 64);
    if (rhs) row[n_ / 64] |= std::uint64_t{1} << (n_ % 64);
    rows_.push_back(std::move(row));
  }

  void add_empty_row() { rows_.emplace_back(words_, 0); }

  void set_entry(std::size_t row, unsigned col, bool v) { set_bit(rows_[row], col, v); }
  void set_rhs(std::size_t row, bool v) { set_bit(rows_[row], n_, v); }

  std::optional<std::vector<std::uint8_t>> solve() const {
    std::vector<std::vector<std::uint64_t>> m = rows_;
    std::vector<int> pivot_of_col(n_, -1);
    std::size_t next_row = 0;
    for (unsigned col = 0; col < n_ && next_row < m.size(); ++col) {
      std::size_t pr = next_row;
      while (pr < m.size() && !get_bit(m[pr], col)) ++pr;
      if (pr == m.size()) continue;
      std::swap(m[next_row], m[pr]);
      for (std::size_t r = 0; r < m.size(); ++r)
        if (r != next_row && get_bit(m[r], col))
          for (std::size_t w = 0; w < words_; ++w) m[r][w] ^= m[next_row][w];
      pivot_of_col[col] = static_cast<int>(next_row);
      ++next_row;
    }
    for (std::size_t r = next_row; r < m.size(); ++r) {
      bool any = false;
      for (unsigned col = 0; col < n_ && !any; ++col) any = get_bit(m[r], col);
      if (!any && get_bit(m[r], n_)) return std::nullopt;
    }
    std::vector<std::uint8_t> x(n_, 0);
    for (unsigned col = 0; col < n_; ++col)
      if (pivot_of_col[col] >= 0)
        x[col] = get_bit(m[static_cast<std::size_t>(pivot_of_col[col])], n_) ? 1 : 0;
    return x;
  }

 private:
  static bool get_bit(const std::vector<std::uint64_t>& row, unsigned i) {
    return (row[i / 64] >> (i % 64)) & 1u;
  }
  static void set_bit(std::vector<std::uint64_t>& row, unsigned i, bool v) {
    if (v)
      row[i / 64] |= std::uint64_t{1} << (i % 64);
    else
      row[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  unsigned n_;
  std::size_t words_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace arf
