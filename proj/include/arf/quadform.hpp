#pragma once

// Quadratic forms in characteristic 2, stored as the Gram matrix of the
// polar form plus the diagonal of values on the basis. The Gram matrix
// must be symmetric with zero diagonal; evaluation follows
// q(sum x_i v_i) = sum x_i^2 q(v_i) + sum_{i<j} x_i x_j b(v_i, v_j).
// The field context must outlive the form.

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "arf/errors.hpp"
#include "arf/field.hpp"
#include "arf/linalg.hpp"

namespace arf {

template <CharTwoField F>
class QuadForm {
 public:
  using Elem = typename F::Elem;

  QuadForm(const F& k, Mat<F> gram, Vec<F> diag)
      : k_(&k), gram_(std::move(gram)), diag_(std::move(diag)) {
    const std::size_t d = diag_.size();
    if (gram_.rows() != d || gram_.cols() != d)
      fail(Err::InvalidForm, "gram shape does not match diag length");
    for (std::size_t i = 0; i < d; ++i) {
      if (!k.is_zero(gram_.at(i, i)))
        fail(Err::InvalidForm, "gram diagonal must be zero (polar form is alternating)");
      for (std::size_t j = i + 1; j < d; ++j)
        if (!k.eq(gram_.at(i, j), gram_.at(j, i)))
          fail(Err::InvalidForm, "gram must be symmetric");
    }
  }

  const F& field() const { return *k_; }
  std::size_t dim() const { return diag_.size(); }
  const Mat<F>& gram() const { return gram_; }
  const Vec<F>& diag() const { return diag_; }

  QuadForm with_field(const F& k2) const {
    if (!(*k_ == k2)) return QuadForm(k2, gram_, diag_);
    return *this;
  }

  Elem eval(const Vec<F>& x) const {
    const F& k = *k_;
    if (x.size() != dim()) fail(Err::DimensionMismatch, "vector length does not match form");
    Elem r = k.zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (k.is_zero(x[i])) continue;
      r = k.add(r, k.mul(k.mul(x[i], x[i]), diag_[i]));
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (!k.is_zero(x[j]))
          r = k.add(r, k.mul(k.mul(x[i], x[j]), gram_.at(i, j)));
    }
    return r;
  }

  Elem polar(const Vec<F>& x, const Vec<F>& y) const {
    const F& k = *k_;
    if (x.size() != dim() || y.size() != dim())
      fail(Err::DimensionMismatch, "vector length does not match form");
    Elem r = k.zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (k.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        if (!k.is_zero(y[j]))
          r = k.add(r, k.mul(k.mul(x[i], y[j]), gram_.at(i, j)));
    }
    return r;
  }

  bool nondegenerate() const { return is_invertible(*k_, gram_); }

 private:
  const F* k_;
  Mat<F> gram_;
  Vec<F> diag_;
};

template <CharTwoField F>
QuadForm<F> orth_sum(const QuadForm<F>& a, const QuadForm<F>& b) {
  const F& k = a.field();
  if (!(k == b.field())) fail(Err::ContextMismatch, "orthogonal sum needs one field context");
  const std::size_t da = a.dim(), db = b.dim();
  Mat<F> gram(da + db, da + db, k.zero());
  Vec<F> diag;
  diag.reserve(da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) gram.at(i, j) = a.gram().at(i, j);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) gram.at(da + i, da + j) = b.gram().at(i, j);
  for (const auto& v : a.diag()) diag.push_back(v);
  for (const auto& v : b.diag()) diag.push_back(v);
  return QuadForm<F>(k, std::move(gram), std::move(diag));
}

// q'(x) = q(Mx): Gram pulls back as M^T G M, each new diagonal entry is
// q evaluated on the corresponding column of M.
template <CharTwoField F>
QuadForm<F> base_change(const QuadForm<F>& q, const Mat<F>& m) {
  const F& k = q.field();
  if (m.rows() != q.dim() || m.cols() != q.dim())
    fail(Err::DimensionMismatch, "base change matrix shape mismatch");
  if (!is_invertible(k, m)) fail(Err::SingularMatrix, "base change matrix is singular");
  Mat<F> gram = mat_mul(k, transpose(m), mat_mul(k, q.gram(), m));
  Vec<F> diag;
  diag.reserve(q.dim());
  for (std::size_t j = 0; j < q.dim(); ++j) diag.push_back(q.eval(m.col(j)));
  return QuadForm<F>(k, std::move(gram), std::move(diag));
}

// Gram matrix of the standard symplectic form: blocks [[0,1],[1,0]].
template <CharTwoField F>
Mat<F> standard_symplectic_gram(const F& k, std::size_t dim) {
  Mat<F> j(dim, dim, k.zero());
  for (std::size_t i = 0; i + 1 < dim; i += 2) {
    j.at(i, i + 1) = k.one();
    j.at(i + 1, i) = k.one();
  }
  return j;
}

// Change of basis to e1, f1, ..., en, fn with b(ei, fj) = delta_ij and
// all other pairings zero. Pairs are split off greedily: the surviving
// vector with the lowest index is e, its lowest-index partner becomes f
// after scaling, and both are projected out of the rest.
template <CharTwoField F>
Mat<F> symplectic_basis(const QuadForm<F>& q) {
  const F& k = q.field();
  if (!q.nondegenerate()) fail(Err::DegenerateForm, "symplectic basis needs invertible gram");
  const std::size_t d = q.dim();
  const Mat<F> id = Mat<F>::identity(k, d);
  std::vector<Vec<F>> pool;
  for (std::size_t j = 0; j < d; ++j) pool.push_back(id.col(j));
  Mat<F> out(d, d, k.zero());
  std::size_t placed = 0;
  while (!pool.empty()) {
    Vec<F> e = pool.front();
    pool.erase(pool.begin());
    std::size_t wi = 0;
    while (wi < pool.size() && k.is_zero(q.polar(e, pool[wi]))) ++wi;
    if (wi == pool.size()) fail(Err::DegenerateForm, "vector with no symplectic partner");
    Vec<F> f = vec_scale(k, k.inv(q.polar(e, pool[wi])), pool[wi]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(wi));
    for (auto& u : pool) {
      Vec<F> adj = vec_add(k, vec_scale(k, q.polar(u, f), e), vec_scale(k, q.polar(u, e), f));
      u = vec_add(k, u, adj);
    }
    out.set_col(placed++, e);
    out.set_col(placed++, f);
  }
  return out;
}

// Product of `count` random symplectic transvections
// x -> x + c b(x, v) v of the standard symplectic gram.
template <CharTwoField F>
Mat<F> random_symplectic_map(const F& k, std::size_t dim, std::mt19937_64& rng,
                             unsigned count) {
  const Mat<F> j = standard_symplectic_gram(k, dim);
  Mat<F> acc = Mat<F>::identity(k, dim);
  for (unsigned it = 0; it < count; ++it) {
    Vec<F> v(dim, k.zero());
    bool nonzero = false;
    while (!nonzero) {
      for (auto& c : v) {
        c = k.random_elem(rng);
        nonzero = nonzero || !k.is_zero(c);
      }
    }
    typename F::Elem c = k.zero();
    while (k.is_zero(c)) c = k.random_elem(rng);
    Vec<F> jv = mat_vec(k, j, v);
    Mat<F> t = Mat<F>::identity(k, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t s = 0; s < dim; ++s)
        t.at(r, s) = k.add(t.at(r, s), k.mul(c, k.mul(v[r], jv[s])));
    acc = mat_mul(k, t, acc);
  }
  return acc;
}

}  // namespace arf
