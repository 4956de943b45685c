#pragma once

// The perfect-closure tower of F2(t): level m works in F2(u) with u
// standing for t^(1/2^m). A TowerElem stores the minimal level at which
// its value can be written, so the stored level equals its height over
// F2(t); squaring demotes a level, square roots promote one.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "arf/errors.hpp"
#include "arf/f2solve.hpp"
#include "arf/poly2.hpp"
#include "arf/ratfunc.hpp"

namespace arf {

inline constexpr unsigned kDefaultLevelCap = 8;

class TowerElem {
 public:
  TowerElem() = default;

  TowerElem(unsigned level, RatFunc value) : level_(level), val_(std::move(value)) {
    while (level_ > 0 && val_.all_even_exponents()) {
      val_ = val_.halved_exponents();
      --level_;
    }
  }

  static TowerElem from_ratfunc(RatFunc value) { return TowerElem(0, std::move(value)); }

  unsigned level() const { return level_; }
  const RatFunc& value() const { return val_; }
  bool is_zero() const { return val_.is_zero(); }
  bool is_one() const { return val_.is_one(); }

  // The same element written in the variable of a higher level.
  RatFunc value_at(unsigned ambient) const {
    return val_.inflated(ambient - level_);
  }

  friend TowerElem operator+(const TowerElem& a, const TowerElem& b) {
    unsigned m = std::max(a.level_, b.level_);
    return TowerElem(m, a.value_at(m) + b.value_at(m));
  }
  friend TowerElem operator*(const TowerElem& a, const TowerElem& b) {
    unsigned m = std::max(a.level_, b.level_);
    return TowerElem(m, a.value_at(m) * b.value_at(m));
  }

  TowerElem inv() const { return TowerElem(level_, val_.inv()); }

  TowerElem frobenius() const {
    if (level_ > 0) return TowerElem(level_ - 1, val_);
    return TowerElem(0, val_.squared());
  }

  // Uncapped square root; contexts wrap this with their level cap.
  TowerElem sqrt_raw() const {
    if (val_.all_even_exponents()) return TowerElem(level_, val_.halved_exponents());
    return TowerElem(level_ + 1, val_);
  }

  TowerElem artin_schreier() const { return frobenius() + *this; }

  friend bool operator==(const TowerElem&, const TowerElem&) = default;

 private:
  unsigned level_ = 0;
  RatFunc val_;
};

// Decides x in P(K) and produces the witness. Writing x = U/V reduced,
// a solution c = P/Q in lowest terms must have Q^2 = V: from
// c^2 + c = (P^2 + PQ)/Q^2 the right side is already reduced, because a
// common factor g of P^2+PQ and Q^2 would divide gcd(P,Q)^2 = 1 after
// splitting g into factors of P and Q. So V must be a square in F2[u],
// Q = sqrt(V), and the remaining equation P^2 + PQ = U is F2-linear in
// the coefficients of P.
//
// Degree bound deg P <= max(deg Q, deg U), by cases on p = deg P:
//   p > deg Q: deg(P^2+PQ) = 2p, so 2p = deg U and p <= deg U;
//   p < deg Q: deg(P^2+PQ) = p + deg Q, so p = deg U - deg Q < deg Q;
//   p = deg Q: the leading terms of P^2 and PQ cancel (coefficients are
//     1 in F2), and p = deg Q directly.
// The solution set is {c, c+1} = {P/Q, (P+Q)/Q}; the returned witness
// is the one whose numerator is 0 at the lowest set exponent of Q,
// which is the lexicographically smaller coefficient string.
inline std::optional<TowerElem> as_member(const TowerElem& x) {
  const Poly2& U = x.value().num();
  const Poly2& V = x.value().den();
  if (!V.all_even_exponents()) return std::nullopt;
  Poly2 Q = V.halved_exponents();

  const int D = std::max(Q.degree(), U.degree());
  const int rows = 2 * D + 1;
  F2System sys(static_cast<unsigned>(D + 1));
  for (int e = 0; e < rows; ++e) {
    std::vector<std::uint8_t> row(static_cast<std::size_t>(D + 1), 0);
    if (e % 2 == 0 && e / 2 <= D) row[static_cast<std::size_t>(e / 2)] ^= 1;
    for (int j = 0; j <= std::min(D, e); ++j)
      if (Q.coeff(static_cast<unsigned>(e - j))) row[static_cast<std::size_t>(j)] ^= 1;
    sys.add_row(row, U.coeff(static_cast<unsigned>(e)));
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;

  Poly2 P;
  for (int j = 0; j <= D; ++j)
    if ((*sol)[static_cast<std::size_t>(j)]) P.set_coeff(static_cast<unsigned>(j), true);
  unsigned qlow = 0;
  while (!Q.coeff(qlow)) ++qlow;
  if (P.coeff(qlow)) P += Q;
  return TowerElem(x.level(), RatFunc(P, Q));
}

// Folds t^(2j) to t^j (they differ by the Artin-Schreier image of t^j)
// until every exponent is odd or zero. Readable, not canonical: class
// equality still goes through as_member.
inline Poly2 poly_class_normal_form(Poly2 p) {
  for (;;) {
    std::vector<unsigned> evens;
    p.for_each_exponent([&](unsigned e) {
      if (e != 0 && e % 2 == 0) evens.push_back(e);
    });
    if (evens.empty()) return p;
    for (unsigned e : evens) {
      p.set_coeff(e, false);
      p.set_coeff(e / 2, !p.coeff(e / 2));
    }
  }
}

// F2(t) and its tower as a field context. `level` is the declared level
// for element I/O; square roots may climb past it, up to `cap`.
class FuncField {
 public:
  using Elem = TowerElem;

  struct Class {
    TowerElem rep;
  };

  struct Descent {
    RatFunc y;
    TowerElem w;
  };

  explicit FuncField(unsigned level = 0, unsigned cap = kDefaultLevelCap)
      : level_(level), cap_(cap) {
    if (level > cap) fail(Err::LevelCapExceeded, "field level exceeds the tower cap");
  }

  unsigned level() const { return level_; }
  unsigned level_cap() const { return cap_; }

  Elem zero() const { return TowerElem(); }
  Elem one() const { return TowerElem::from_ratfunc(RatFunc::from_poly(Poly2::one())); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return a.inv(); }
  Elem frobenius(const Elem& a) const { return a.frobenius(); }

  Elem sqrt(const Elem& a) const {
    TowerElem r = a.sqrt_raw();
    if (r.level() > cap_) fail(Err::LevelCapExceeded, "square root exceeds the tower cap");
    return r;
  }

  Elem artin_schreier(const Elem& a) const { return a.artin_schreier(); }

  std::optional<Elem> as_solve(const Elem& a) const { return as_member(a); }

  unsigned height(const Elem& a) const { return a.level(); }

  Class elem_class(const Elem& a) const { return Class{a}; }
  Class class_add(const Class& a, const Class& b) const { return Class{a.rep + b.rep}; }
  bool class_eq(const Class& a, const Class& b) const {
    return as_member(a.rep + b.rep).has_value();
  }
  bool class_is_zero(const Class& a) const { return as_member(a.rep).has_value(); }

  // The inclusion of F2(t) into level m: substitute t = u^(2^m). The
  // stored representative demotes back to its height, which does not
  // change the class.
  Class lemma0_forward(const RatFunc& x, unsigned m) const {
    if (m > cap_) fail(Err::LevelCapExceeded, "inclusion level exceeds the tower cap");
    return Class{TowerElem(m, x.inflated(m))};
  }

  // Descends x of height m to y = x^(2^m) in F2(t), with the witness
  // w = x + x^2 + ... + x^(2^(m-1)); telescoping gives w^2 + w = y + x
  // exactly, so [x] = [y].
  static Descent lemma0_descend(const Elem& x) {
    Descent d;
    d.y = x.value();
    TowerElem p = x;
    for (unsigned i = 0; i < x.level(); ++i) {
      d.w = d.w + p;
      p = p.frobenius();
    }
    return d;
  }

  Elem random_elem(std::mt19937_64& rng) const {
    unsigned h = static_cast<unsigned>(rng() % (std::min(level_, 3u) + 1));
    Poly2 num = random_poly(rng, 4);
    Poly2 den;
    while (den.is_zero()) den = random_poly(rng, 2);
    return TowerElem(h, RatFunc(num, den));
  }

  static Poly2 random_poly(std::mt19937_64& rng, int max_deg) {
    int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 2)) - 1;
    if (deg < 0) return Poly2();
    Poly2 p = Poly2::monomial(static_cast<unsigned>(deg));
    for (int e = 0; e < deg; ++e)
      if (rng() & 1) p.set_coeff(static_cast<unsigned>(e), true);
    return p;
  }

  friend bool operator==(const FuncField&, const FuncField&) = default;

 private:
  unsigned level_;
  unsigned cap_;
};

}  // namespace arf
