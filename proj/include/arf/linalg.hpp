#pragma once

// Dense exact linear algebra over any CharTwoField. Elimination always
// pivots on the first usable row of the leftmost unresolved column, and
// underdetermined solves set free unknowns to zero, so every result is
// reproducible.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "arf/errors.hpp"
#include "arf/field.hpp"

namespace arf {

template <CharTwoField F>
using Vec = std::vector<typename F::Elem>;

template <CharTwoField F>
class Mat {
 public:
  using Elem = typename F::Elem;

  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, Elem fill)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Mat identity(const F& k, std::size_t n) {
    Mat m(n, n, k.zero());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = k.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec<F> col(std::size_t j) const {
    Vec<F> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
  }

  void set_col(std::size_t j, const Vec<F>& v) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
  }

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> a_;
};

template <CharTwoField F>
Mat<F> transpose(const Mat<F>& m) {
  Mat<F> r(m.cols(), m.rows(), typename F::Elem{});
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(j, i) = m.at(i, j);
  return r;
}

template <CharTwoField F>
Mat<F> mat_mul(const F& k, const Mat<F>& a, const Mat<F>& b) {
  if (a.cols() != b.rows()) fail(Err::DimensionMismatch, "matrix product shape mismatch");
  Mat<F> r(a.rows(), b.cols(), k.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (k.is_zero(a.at(i, l))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r.at(i, j) = k.add(r.at(i, j), k.mul(a.at(i, l), b.at(l, j)));
    }
  return r;
}

template <CharTwoField F>
Vec<F> mat_vec(const F& k, const Mat<F>& a, const Vec<F>& x) {
  if (a.cols() != x.size()) fail(Err::DimensionMismatch, "matrix-vector shape mismatch");
  Vec<F> r(a.rows(), k.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!k.is_zero(a.at(i, j))) r[i] = k.add(r[i], k.mul(a.at(i, j), x[j]));
  return r;
}

template <CharTwoField F>
Vec<F> vec_add(const F& k, const Vec<F>& x, const Vec<F>& y) {
  if (x.size() != y.size()) fail(Err::DimensionMismatch, "vector sum shape mismatch");
  Vec<F> r(x.size(), k.zero());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = k.add(x[i], y[i]);
  return r;
}

template <CharTwoField F>
Vec<F> vec_scale(const F& k, const typename F::Elem& c, const Vec<F>& x) {
  Vec<F> r(x.size(), k.zero());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = k.mul(c, x[i]);
  return r;
}

template <CharTwoField F>
std::size_t rank(const F& k, Mat<F> m) {
  std::size_t next = 0;
  for (std::size_t col = 0; col < m.cols() && next < m.rows(); ++col) {
    std::size_t pr = next;
    while (pr < m.rows() && k.is_zero(m.at(pr, col))) ++pr;
    if (pr == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(next, j), m.at(pr, j));
    auto piv_inv = k.inv(m.at(next, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(next, j) = k.mul(piv_inv, m.at(next, j));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next || k.is_zero(m.at(r, col))) continue;
      auto f = m.at(r, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(r, j) = k.add(m.at(r, j), k.mul(f, m.at(next, j)));
    }
    ++next;
  }
  return next;
}

template <CharTwoField F>
std::optional<Mat<F>> mat_inverse(const F& k, const Mat<F>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const std::size_t n = a.rows();
  Mat<F> m = a;
  Mat<F> inv = Mat<F>::identity(k, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && k.is_zero(m.at(pr, col))) ++pr;
    if (pr == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m.at(col, j), m.at(pr, j));
      std::swap(inv.at(col, j), inv.at(pr, j));
    }
    auto piv_inv = k.inv(m.at(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      m.at(col, j) = k.mul(piv_inv, m.at(col, j));
      inv.at(col, j) = k.mul(piv_inv, inv.at(col, j));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || k.is_zero(m.at(r, col))) continue;
      auto f = m.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(r, j) = k.add(m.at(r, j), k.mul(f, m.at(col, j)));
        inv.at(r, j) = k.add(inv.at(r, j), k.mul(f, inv.at(col, j)));
      }
    }
  }
  return inv;
}

template <CharTwoField F>
bool is_invertible(const F& k, const Mat<F>& a) {
  return a.rows() == a.cols() && rank(k, a) == a.rows();
}

// Solves A x = b; free unknowns are zero, so the solution is unique for
// a fixed elimination order even when the system is underdetermined.
template <CharTwoField F>
std::optional<Vec<F>> solve_linear(const F& k, const Mat<F>& a, const Vec<F>& b) {
  if (a.rows() != b.size()) fail(Err::DimensionMismatch, "solve shape mismatch");
  const std::size_t n = a.cols();
  Mat<F> m(a.rows(), n + 1, k.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, n) = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t next = 0;
  for (std::size_t col = 0; col < n && next < m.rows(); ++col) {
    std::size_t pr = next;
    while (pr < m.rows() && k.is_zero(m.at(pr, col))) ++pr;
    if (pr == m.rows()) continue;
    for (std::size_t j = 0; j <= n; ++j) std::swap(m.at(next, j), m.at(pr, j));
    auto piv_inv = k.inv(m.at(next, col));
    for (std::size_t j = 0; j <= n; ++j) m.at(next, j) = k.mul(piv_inv, m.at(next, j));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == next || k.is_zero(m.at(r, col))) continue;
      auto f = m.at(r, col);
      for (std::size_t j = 0; j <= n; ++j)
        m.at(r, j) = k.add(m.at(r, j), k.mul(f, m.at(next, j)));
    }
    pivot_col.push_back(col);
    ++next;
  }
  for (std::size_t r = next; r < m.rows(); ++r)
    if (!k.is_zero(m.at(r, n))) return std::nullopt;
  Vec<F> x(n, k.zero());
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m.at(i, n);
  return x;
}

}  // namespace arf
