#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "arf/invariant.hpp"
#include "generators.hpp"

using arf::ArfError;
using arf::arf_diagram_check;
using arf::arf_invariant;
using arf::common_wu_vector;
using arf::Err;
using arf::FuncField;
using arf::Gf2Field;
using arf::Lagrangian;
using arf::Mat;
using arf::orth_sum;
using arf::parf;
using arf::Poly2;
using arf::q_lambda;
using arf::QuadForm;
using arf::RatFunc;
using arf::standard_symplectic_gram;
using arf::TowerElem;
using arf::Vec;
using arf::witt_class;
using arf::witt_decompose;
using arf::wu_vector;

namespace {

const Gf2Field kF2(1, 3);
const Gf2Field kF4(2, 7);
const Gf2Field kF8(3, 11);

QuadForm<Gf2Field> hyperbolic(const Gf2Field& k, std::size_t dim) {
  return QuadForm<Gf2Field>(k, standard_symplectic_gram(k, dim),
                            Vec<Gf2Field>(dim, k.zero()));
}

TowerElem tp(std::uint64_t bits) {
  return TowerElem::from_ratfunc(RatFunc::from_poly(Poly2::from_bits(bits)));
}

QuadForm<FuncField> ft_form(const FuncField& K, std::uint64_t qe, std::uint64_t qf) {
  return QuadForm<FuncField>(K, standard_symplectic_gram(K, 2),
                             Vec<FuncField>{tp(qe), tp(qf)});
}

}  // namespace

TEST_CASE("Wu vectors", "[invariant]") {
  auto ql = q_lambda(kF4, 2u);
  Lagrangian<Gf2Field> span_e{Mat<Gf2Field>(2, 1, 0u)};
  span_e.basis.at(0, 0) = 1;
  CHECK(wu_vector(ql, span_e) == Vec<Gf2Field>{0, 1});

  auto h4 = hyperbolic(kF2, 4);
  auto q4 = QuadForm<Gf2Field>(kF2, h4.gram(), Vec<Gf2Field>{1, 0, 1, 0});
  Lagrangian<Gf2Field> l{Mat<Gf2Field>(4, 2, 0u)};
  l.basis.at(0, 0) = 1;
  l.basis.at(2, 1) = 1;
  CHECK(wu_vector(q4, l) == Vec<Gf2Field>{0, 1, 0, 1});

  Lagrangian<Gf2Field> bad{Mat<Gf2Field>(4, 2, 0u)};
  bad.basis.at(0, 0) = 1;
  bad.basis.at(1, 1) = 1;
  CHECK_THROWS_AS(wu_vector(q4, bad), ArfError);
  try {
    wu_vector(q4, bad);
  } catch (const ArfError& e) {
    CHECK(e.code() == Err::NotALagrangian);
  }
}

TEST_CASE("Wu property holds for random Lagrangians", "[invariant]") {
  std::mt19937_64 rng(20260821);
  for (int i = 0; i < 40; ++i) {
    auto q = testgen::random_nondeg_form(kF8, 6, rng);
    auto s = arf::symplectic_basis(q);
    auto t = arf::random_symplectic_map(kF8, 6, rng, 5);
    auto st = arf::mat_mul(kF8, s, t);
    Lagrangian<Gf2Field> l{Mat<Gf2Field>(6, 3, 0u)};
    for (int j = 0; j < 3; ++j) l.basis.set_col(j, st.col(2 * j));
    auto w = wu_vector(q, l);
    for (int j = 0; j < 3; ++j)
      CHECK(q.polar(w, l.basis.col(j)) == kF8.sqrt(q.eval(l.basis.col(j))));
  }
}

TEST_CASE("Lemma 1 classes", "[invariant]") {
  auto h = hyperbolic(kF2, 2);
  Lagrangian<Gf2Field> span_e{Mat<Gf2Field>(2, 1, 0u)};
  span_e.basis.at(0, 0) = 1;
  auto w = wu_vector(h, span_e);
  CHECK(w == Vec<Gf2Field>{0, 0});
  CHECK(kF2.class_is_zero(arf::lemma1_class(h, span_e, w)));

  CHECK(kF4.class_eq(parf(q_lambda(kF4, 2u)), kF4.elem_class(2u)));
  CHECK_FALSE(kF4.class_is_zero(parf(q_lambda(kF4, 2u))));
}

TEST_CASE("Lemma 1 exact coset identity", "[invariant]") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    auto q = testgen::random_nondeg_form(kF4, 4, rng);
    auto s = arf::symplectic_basis(q);
    Lagrangian<Gf2Field> l{Mat<Gf2Field>(4, 2, 0u)};
    l.basis.set_col(0, s.col(0));
    l.basis.set_col(1, s.col(2));
    auto w = wu_vector(q, l);
    for (std::uint32_t c0 = 0; c0 < 4; ++c0)
      for (std::uint32_t c1 = 0; c1 < 4; ++c1) {
        auto lv = arf::vec_add(kF4, arf::vec_scale(kF4, c0, l.basis.col(0)),
                               arf::vec_scale(kF4, c1, l.basis.col(1)));
        auto lhs = q.eval(arf::vec_add(kF4, w, lv));
        auto rhs = kF4.add(q.eval(w), kF4.artin_schreier(kF4.sqrt(q.eval(lv))));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("parf surjectivity on q_lambda", "[invariant]") {
  for (std::uint32_t lam = 0; lam < 4; ++lam)
    CHECK(kF4.class_eq(parf(q_lambda(kF4, lam)), kF4.elem_class(lam)));
  for (std::uint32_t lam = 0; lam < 8; ++lam)
    CHECK(kF8.class_eq(parf(q_lambda(kF8, lam)), kF8.elem_class(lam)));
  CHECK(kF2.class_is_zero(parf(orth_sum(hyperbolic(kF2, 2), hyperbolic(kF2, 2)))));
  CHECK(parf(QuadForm<Gf2Field>(kF2, standard_symplectic_gram(kF2, 2),
                                Vec<Gf2Field>{1, 1})) == 1u);
}

TEST_CASE("Arf invariant over binary fields and F2(t)", "[invariant]") {
  auto q4 = QuadForm<Gf2Field>(kF2, standard_symplectic_gram(kF2, 4),
                               Vec<Gf2Field>{1, 1, 1, 1});
  CHECK(kF2.class_is_zero(arf_invariant(q4)));

  FuncField K0(0);
  auto qt = ft_form(K0, 1, 0b10);
  auto cls = arf_invariant(qt);
  CHECK_FALSE(K0.class_is_zero(cls));
  CHECK(K0.class_eq(cls, K0.elem_class(tp(0b10))));

  auto qt2 = ft_form(K0, 1, 0b100);
  CHECK(K0.class_eq(arf_invariant(qt2), K0.elem_class(tp(0b10))));
  CHECK(K0.class_eq(arf_invariant(qt2), cls));
}

TEST_CASE("parf agrees with the symplectic-sum route over perfect fields", "[invariant]") {
  std::mt19937_64 rng(29);
  for (unsigned d : {2u, 4u, 6u}) {
    for (int i = 0; i < 25; ++i) {
      auto q = testgen::random_nondeg_form(kF4, d, rng);
      CHECK(kF4.class_eq(parf(q), arf_invariant(q)));
      auto q8 = testgen::random_nondeg_form(kF8, d, rng);
      CHECK(kF8.class_eq(parf(q8), arf_invariant(q8)));
    }
  }
}

TEST_CASE("commutative diagram over the tower", "[invariant]") {
  FuncField K0(0);
  FuncField K1(1);
  FuncField K2(2);
  CHECK(arf_diagram_check(ft_form(K0, 1, 0b10), 1, K1));
  CHECK(arf_diagram_check(ft_form(K0, 0, 0), 1, K1));

  std::mt19937_64 rng(31);
  for (int i = 0; i < 12; ++i) {
    auto q = testgen::random_poly_form(K0, 4, 4, rng);
    CHECK(arf_diagram_check(q, 2, K2));
  }
}

TEST_CASE("common Wu vectors", "[invariant]") {
  auto h = hyperbolic(kF2, 2);
  Lagrangian<Gf2Field> le{Mat<Gf2Field>(2, 1, 0u)};
  le.basis.at(0, 0) = 1;
  Lagrangian<Gf2Field> lf{Mat<Gf2Field>(2, 1, 0u)};
  lf.basis.at(1, 0) = 1;
  auto w = common_wu_vector(h, le, lf);
  CHECK(h.polar(w, le.basis.col(0)) == kF2.sqrt(h.eval(le.basis.col(0))));
  CHECK(h.polar(w, lf.basis.col(0)) == kF2.sqrt(h.eval(lf.basis.col(0))));

  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    auto q = testgen::random_nondeg_form(kF4, 4, rng);
    auto s = arf::symplectic_basis(q);
    auto t1 = arf::random_symplectic_map(kF4, 4, rng, 4);
    auto t2 = arf::random_symplectic_map(kF4, 4, rng, 4);
    Lagrangian<Gf2Field> l1{Mat<Gf2Field>(4, 2, 0u)};
    Lagrangian<Gf2Field> l2{Mat<Gf2Field>(4, 2, 0u)};
    auto s1 = arf::mat_mul(kF4, s, t1);
    auto s2 = arf::mat_mul(kF4, s, t2);
    for (int j = 0; j < 2; ++j) {
      l1.basis.set_col(j, s1.col(2 * j));
      l2.basis.set_col(j, s2.col(2 * j));
    }
    auto cw = common_wu_vector(q, l1, l2);
    for (int j = 0; j < 2; ++j) {
      CHECK(q.polar(cw, l1.basis.col(j)) == kF4.sqrt(q.eval(l1.basis.col(j))));
      CHECK(q.polar(cw, l2.basis.col(j)) == kF4.sqrt(q.eval(l2.basis.col(j))));
    }
    CHECK(kF4.class_eq(kF4.elem_class(q.eval(cw)), parf(q)));
  }
}

TEST_CASE("Witt decomposition", "[invariant]") {
  auto [c1, r1] = witt_decompose(hyperbolic(kF2, 2));
  CHECK(c1 == 1);
  CHECK(r1.dim() == 0);

  auto aniso = QuadForm<Gf2Field>(kF2, standard_symplectic_gram(kF2, 2),
                                  Vec<Gf2Field>{1, 1});
  auto [c2, r2] = witt_decompose(aniso);
  CHECK(c2 == 0);
  CHECK(r2.dim() == 2);
  CHECK(r2.diag() == aniso.diag());

  auto q4 = QuadForm<Gf2Field>(kF2, standard_symplectic_gram(kF2, 4),
                               Vec<Gf2Field>{1, 1, 1, 1});
  auto [c3, r3] = witt_decompose(q4);
  CHECK(c3 == 2);
  CHECK(r3.dim() == 0);

  Gf2Field big(8, 283);
  auto over_budget = QuadForm<Gf2Field>(big, standard_symplectic_gram(big, 4),
                                        Vec<Gf2Field>(4, 0u));
  CHECK_THROWS_AS(witt_decompose(over_budget), ArfError);
  try {
    witt_decompose(over_budget);
  } catch (const ArfError& e) {
    CHECK(e.code() == Err::BudgetExceeded);
  }
}

TEST_CASE("Witt classes are consistent", "[invariant]") {
  CHECK(witt_class(hyperbolic(kF2, 4)) == arf::WittClass{0, 0});
  CHECK(witt_class(QuadForm<Gf2Field>(kF2, standard_symplectic_gram(kF2, 2),
                                      Vec<Gf2Field>{1, 1})) == arf::WittClass{1, 2});
  CHECK(witt_class(q_lambda(kF4, 2u)) == arf::WittClass{1, 2});

  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    auto q = testgen::random_nondeg_form(kF4, 4, rng);
    auto wc = witt_class(q);
    CHECK((wc.arf_bit == 0) == (wc.n_residue == 0));
  }
}

TEST_CASE("Arf is additive on orthogonal sums", "[invariant]") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 40; ++i) {
    auto a = testgen::random_nondeg_form(kF4, 2, rng);
    auto b = testgen::random_nondeg_form(kF4, 4, rng);
    CHECK(kF4.class_eq(arf_invariant(orth_sum(a, b)),
                       kF4.class_add(arf_invariant(a), arf_invariant(b))));
  }
  FuncField K0(0);
  for (int i = 0; i < 15; ++i) {
    auto a = testgen::random_poly_form(K0, 2, 3, rng);
    auto b = testgen::random_poly_form(K0, 2, 3, rng);
    CHECK(K0.class_eq(arf_invariant(orth_sum(a, b)),
                      K0.class_add(arf_invariant(a), arf_invariant(b))));
  }
}
