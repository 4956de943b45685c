#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "arf/poly2.hpp"
#include "arf/ratfunc.hpp"

using arf::ArfError;
using arf::Err;
using arf::Poly2;
using arf::RatFunc;

namespace {

Poly2 random_poly(std::mt19937_64& rng, int max_deg) {
  int deg = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 2)) - 1;
  if (deg < 0) return Poly2();
  Poly2 p = Poly2::monomial(static_cast<unsigned>(deg));
  for (int e = 0; e < deg; ++e)
    if (rng() & 1) p.set_coeff(static_cast<unsigned>(e), true);
  return p;
}

RatFunc random_ratfunc(std::mt19937_64& rng, int max_deg) {
  Poly2 den;
  while (den.is_zero()) den = random_poly(rng, max_deg);
  return RatFunc(random_poly(rng, max_deg), den);
}

const Poly2 kT = Poly2::from_bits(2);

}  // namespace

TEST_CASE("construction reduces to lowest terms", "[ratfunc]") {
  CHECK(RatFunc().is_zero());
  CHECK(RatFunc().den().is_one());
  CHECK(RatFunc(kT * kT + kT, kT) == RatFunc::from_poly(kT + Poly2::one()));
  CHECK(RatFunc(Poly2(), kT) == RatFunc());

  Poly2 tp1 = kT + Poly2::one();
  CHECK(RatFunc(tp1 * tp1, tp1) == RatFunc::from_poly(tp1));

  CHECK_THROWS_AS(RatFunc(Poly2::one(), Poly2()), ArfError);
  try {
    RatFunc(Poly2::one(), Poly2());
  } catch (const ArfError& e) {
    CHECK(e.code() == Err::ZeroDenominator);
  }
}

TEST_CASE("arithmetic in characteristic 2", "[ratfunc]") {
  RatFunc t = RatFunc::from_poly(kT);
  CHECK((t + t).is_zero());
  CHECK(t.inv() + t == RatFunc(kT * kT + Poly2::one(), kT));
  CHECK(t * t.inv() == RatFunc::from_poly(Poly2::one()));

  RatFunc q = RatFunc(kT * kT + Poly2::one(), Poly2::one());
  CHECK(q.inv() == RatFunc(Poly2::one(), kT * kT + Poly2::one()));
  CHECK(q.degree() == 2);
  CHECK(RatFunc(kT * kT + Poly2::one(), kT).degree() == 2);

  CHECK_THROWS_AS(RatFunc().inv(), ArfError);
  try {
    RatFunc().inv();
  } catch (const ArfError& e) {
    CHECK(e.code() == Err::ZeroInverse);
  }
}

TEST_CASE("squares and even exponents", "[ratfunc]") {
  RatFunc f = RatFunc(kT * kT * kT + Poly2::one(), kT);
  RatFunc sq = f.squared();
  CHECK(sq == f * f);
  CHECK(sq.all_even_exponents());
  CHECK(sq.halved_exponents() == f);
  CHECK_FALSE(f.all_even_exponents());
  CHECK(f.inflated(2) == f.squared().squared());

  RatFunc g = RatFunc(kT * kT + Poly2::one(), kT * kT);
  CHECK(g.all_even_exponents());
  CHECK(g.halved_exponents() == RatFunc(kT + Poly2::one(), kT));
}

TEST_CASE("field identities on random inputs", "[ratfunc]") {
  std::mt19937_64 rng(20260821);
  for (int i = 0; i < 150; ++i) {
    RatFunc a = random_ratfunc(rng, 8);
    RatFunc b = random_ratfunc(rng, 8);
    RatFunc c = random_ratfunc(rng, 8);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + a).is_zero());
    CHECK((a + b).squared() == a.squared() + b.squared());
    if (!a.is_zero()) {
      CHECK(a * a.inv() == RatFunc::from_poly(Poly2::one()));
      CHECK(a.inv().inv() == a);
    }
  }
}
