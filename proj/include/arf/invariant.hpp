#pragma once

// Wu vectors, the Parf and Arf invariants, common Wu vectors across two
// Lagrangians, and Witt decomposition over binary fields.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "arf/errors.hpp"
#include "arf/field.hpp"
#include "arf/linalg.hpp"
#include "arf/quadform.hpp"

namespace arf {

// Basis of a b-Lagrangian: dim/2 independent columns that pair to zero
// under the polar form.
template <CharTwoField F>
struct Lagrangian {
  Mat<F> basis;
};

template <CharTwoField F>
void check_lagrangian(const QuadForm<F>& q, const Lagrangian<F>& l) {
  const F& k = q.field();
  const std::size_t d = q.dim();
  if (d % 2 != 0 || l.basis.rows() != d || l.basis.cols() != d / 2)
    fail(Err::NotALagrangian, "Lagrangian basis must hold dim/2 vectors");
  if (rank(k, l.basis) != d / 2)
    fail(Err::NotALagrangian, "Lagrangian basis vectors are dependent");
  for (std::size_t i = 0; i < d / 2; ++i)
    for (std::size_t j = i; j < d / 2; ++j)
      if (!k.is_zero(q.polar(l.basis.col(i), l.basis.col(j))))
        fail(Err::NotALagrangian, "basis vectors do not pair to zero");
}

// The span of e1..en from a symplectic basis, the default Lagrangian.
template <CharTwoField F>
Lagrangian<F> symplectic_lagrangian(const QuadForm<F>& q) {
  Mat<F> s = symplectic_basis(q);
  Mat<F> basis(q.dim(), q.dim() / 2, q.field().zero());
  for (std::size_t i = 0; i < q.dim() / 2; ++i) basis.set_col(i, s.col(2 * i));
  return Lagrangian<F>{std::move(basis)};
}

// Solves b(w, l_i) = sqrt(q(l_i)) for all basis vectors of L. The
// result is determined only modulo L; the fixed pivot rule plus zero
// free coordinates picks one representative.
template <CharTwoField F>
Vec<F> wu_vector(const QuadForm<F>& q, const Lagrangian<F>& l) {
  const F& k = q.field();
  if (!q.nondegenerate()) fail(Err::DegenerateForm, "Wu vector needs a nondegenerate form");
  check_lagrangian(q, l);
  const std::size_t n = l.basis.cols();
  Mat<F> a(n, q.dim(), k.zero());
  Vec<F> rhs(n, k.zero());
  for (std::size_t i = 0; i < n; ++i) {
    Vec<F> gl = mat_vec(k, q.gram(), l.basis.col(i));
    for (std::size_t j = 0; j < q.dim(); ++j) a.at(i, j) = gl[j];
    rhs[i] = k.sqrt(q.eval(l.basis.col(i)));
  }
  auto w = solve_linear(k, a, rhs);
  if (!w) fail(Err::DecompositionFailed, "Wu system unsolvable for a valid Lagrangian");
  return *w;
}

template <CharTwoField F>
typename F::Class lemma1_class(const QuadForm<F>& q, const Lagrangian<F>& l,
                               const Vec<F>& wu) {
  return q.field().elem_class(q.eval(wu));
}

// Parf route: the class of q(w) for a Wu vector w of any Lagrangian.
template <CharTwoField F>
typename F::Class parf(const QuadForm<F>& q) {
  Lagrangian<F> l = symplectic_lagrangian(q);
  return lemma1_class(q, l, wu_vector(q, l));
}

// Arf route: sum of q(e_i) q(f_i) over a symplectic basis. Needs no
// square roots, so it applies over F2(t) as it stands.
template <CharTwoField F>
typename F::Class arf_invariant(const QuadForm<F>& q) {
  const F& k = q.field();
  Mat<F> s = symplectic_basis(q);
  typename F::Elem sum = k.zero();
  for (std::size_t i = 0; i < q.dim() / 2; ++i)
    sum = k.add(sum, k.mul(q.eval(s.col(2 * i)), q.eval(s.col(2 * i + 1))));
  return k.elem_class(sum);
}

// Compares the two routes from a form over F2(t) to a class at level m:
// the Arf class included upward against the Wu-vector class of the form
// viewed at level m.
inline bool arf_diagram_check(const QuadForm<FuncField>& q, unsigned m,
                              const FuncField& upstairs) {
  auto arf0 = arf_invariant(q);
  auto left = upstairs.lemma0_forward(FuncField::lemma0_descend(arf0.rep).y, m);
  QuadForm<FuncField> qm = q.with_field(upstairs);
  auto right = parf(qm);
  return upstairs.class_eq(left, right);
}

// A vector that is Wu for both Lagrangians at once: split w1 + w2 as
// m1 + m2 with m_i in L_i, then w1 + m1 = w2 + m2 works for both.
template <CharTwoField F>
Vec<F> common_wu_vector(const QuadForm<F>& q, const Lagrangian<F>& l1,
                        const Lagrangian<F>& l2) {
  const F& k = q.field();
  Vec<F> w1 = wu_vector(q, l1);
  Vec<F> w2 = wu_vector(q, l2);
  const std::size_t n1 = l1.basis.cols(), n2 = l2.basis.cols();
  Mat<F> a(q.dim(), n1 + n2, k.zero());
  for (std::size_t j = 0; j < n1; ++j)
    for (std::size_t i = 0; i < q.dim(); ++i) a.at(i, j) = l1.basis.at(i, j);
  for (std::size_t j = 0; j < n2; ++j)
    for (std::size_t i = 0; i < q.dim(); ++i) a.at(i, n1 + j) = l2.basis.at(i, j);
  auto coeffs = solve_linear(k, a, vec_add(k, w1, w2));
  if (!coeffs) fail(Err::DecompositionFailed, "w1 + w2 did not split across the Lagrangians");
  Vec<F> m1(q.dim(), k.zero());
  for (std::size_t j = 0; j < n1; ++j)
    m1 = vec_add(k, m1, vec_scale(k, (*coeffs)[j], l1.basis.col(j)));
  return vec_add(k, w1, m1);
}

template <CharTwoField F>
QuadForm<F> q_lambda(const F& k, const typename F::Elem& lambda) {
  Mat<F> gram = standard_symplectic_gram(k, 2);
  Vec<F> diag{k.one(), lambda};
  return QuadForm<F>(k, std::move(gram), std::move(diag));
}

struct WittClass {
  unsigned arf_bit;
  unsigned n_residue;

  friend bool operator==(const WittClass&, const WittClass&) = default;
};

namespace detail {

inline void decode_vector(const Gf2Field& k, std::uint64_t code, Vec<Gf2Field>& out) {
  const std::uint64_t mask = k.order() - 1;
  for (auto& c : out) {
    c = static_cast<Gf2Field::Elem>(code & mask);
    code >>= k.n();
  }
}

}  // namespace detail

// Splits off hyperbolic planes as long as a nonzero isotropic vector
// exists, scanning vector encodings in ascending order. The remainder
// is the anisotropic part; q is neutral when it is empty.
inline std::pair<unsigned, QuadForm<Gf2Field>> witt_decompose(const QuadForm<Gf2Field>& q) {
  const Gf2Field& k = q.field();
  if (!q.nondegenerate()) fail(Err::DegenerateForm, "Witt decomposition needs nondegeneracy");
  if (k.n() * q.dim() > 24) fail(Err::BudgetExceeded, "exhaustive isotropic scan too large");
  QuadForm<Gf2Field> cur = q;
  unsigned planes = 0;
  while (cur.dim() > 0) {
    const std::uint64_t total = std::uint64_t{1} << (k.n() * cur.dim());
    Vec<Gf2Field> v(cur.dim(), k.zero());
    bool found = false;
    for (std::uint64_t code = 1; code < total && !found; ++code) {
      detail::decode_vector(k, code, v);
      found = k.is_zero(cur.eval(v));
    }
    if (!found) break;
    Vec<Gf2Field> w(cur.dim(), k.zero());
    bool paired = false;
    for (std::uint64_t code = 1; code < total && !paired; ++code) {
      detail::decode_vector(k, code, w);
      paired = !k.is_zero(cur.polar(v, w));
    }
    if (!paired) fail(Err::DecompositionFailed, "isotropic vector has no partner");
    w = vec_scale(k, k.inv(cur.polar(v, w)), w);
    // q(w + cv) = q(w) + c with b(v,w) = 1, so c = q(w) zeroes it.
    w = vec_add(k, w, vec_scale(k, cur.eval(w), v));
    ++planes;
    if (cur.dim() == 2) {
      cur = QuadForm<Gf2Field>(k, Mat<Gf2Field>(0, 0, k.zero()), Vec<Gf2Field>{});
      break;
    }
    // Basis of the orthogonal complement of span(v, w): project the
    // standard basis and keep a maximal independent subset.
    Mat<Gf2Field> proj(cur.dim(), cur.dim(), k.zero());
    for (std::size_t j = 0; j < cur.dim(); ++j) {
      Vec<Gf2Field> u(cur.dim(), k.zero());
      u[j] = k.one();
      u = vec_add(k, u, vec_scale(k, cur.polar(u, w), v));
      u = vec_add(k, u, vec_scale(k, cur.polar(u, v), w));
      proj.set_col(j, u);
    }
    Mat<Gf2Field> comp(cur.dim(), cur.dim() - 2, k.zero());
    std::size_t taken = 0;
    for (std::size_t j = 0; j < cur.dim() && taken < cur.dim() - 2; ++j) {
      comp.set_col(taken, proj.col(j));
      Mat<Gf2Field> trial(cur.dim(), taken + 1, k.zero());
      for (std::size_t c = 0; c <= taken; ++c) trial.set_col(c, comp.col(c));
      if (rank(k, trial) == taken + 1) ++taken;
    }
    if (taken != cur.dim() - 2)
      fail(Err::DecompositionFailed, "complement basis extraction failed");
    Mat<Gf2Field> gram(cur.dim() - 2, cur.dim() - 2, k.zero());
    Vec<Gf2Field> diag;
    for (std::size_t i = 0; i < cur.dim() - 2; ++i) {
      diag.push_back(cur.eval(comp.col(i)));
      for (std::size_t j = 0; j < cur.dim() - 2; ++j)
        if (i != j) gram.at(i, j) = cur.polar(comp.col(i), comp.col(j));
    }
    cur = QuadForm<Gf2Field>(k, std::move(gram), std::move(diag));
  }
  return {planes, cur};
}

inline WittClass witt_class(const QuadForm<Gf2Field>& q) {
  const Gf2Field& k = q.field();
  unsigned bit = k.class_is_zero(arf_invariant(q)) ? 0u : 1u;
  auto [planes, residue] = witt_decompose(q);
  if ((bit == 0) != (residue.dim() == 0))
    fail(Err::InconsistentInvariant, "Arf bit disagrees with Witt decomposition");
  return WittClass{bit, static_cast<unsigned>(residue.dim())};
}

}  // namespace arf
