#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>

#include "arf/gf2.hpp"

using arf::ArfError;
using arf::Err;
using arf::Gf2Field;

namespace {

// Irreducible moduli for n = 1..8, checked against an external
// polynomial-factorization oracle before being frozen here.
constexpr std::uint32_t kModulus[9] = {0, 3, 7, 11, 19, 37, 67, 131, 283};

Err thrown_code(auto&& fn) {
  try {
    fn();
  } catch (const ArfError& e) {
    return e.code();
  }
  FAIL("expected ArfError");
  return Err::InvalidField;
}

}  // namespace

TEST_CASE("context construction validates the modulus", "[gf2]") {
  CHECK_NOTHROW(Gf2Field(1, 3));
  CHECK_NOTHROW(Gf2Field(2, 7));
  CHECK_NOTHROW(Gf2Field(3, 11));
  CHECK_NOTHROW(Gf2Field(8, 283));
  CHECK_NOTHROW(Gf2Field(16, 65581));

  CHECK(thrown_code([] { Gf2Field(2, 5); }) == Err::ReducibleModulus);
  CHECK(thrown_code([] { Gf2Field(4, 21); }) == Err::ReducibleModulus);
  CHECK(thrown_code([] { Gf2Field(0, 1); }) == Err::InvalidField);
  CHECK(thrown_code([] { Gf2Field(17, 1u << 17); }) == Err::InvalidField);
  CHECK(thrown_code([] { Gf2Field(3, 7); }) == Err::InvalidField);
  CHECK(thrown_code([] { Gf2Field(3, 25); }) == Err::InvalidField);
}

TEST_CASE("GF(4) arithmetic", "[gf2]") {
  Gf2Field k(2, 7);
  const auto w = 2u;
  CHECK(k.add(w, w) == 0);
  CHECK(k.add(w, 1) == 3);
  CHECK(k.mul(w, w) == 3);
  CHECK(k.mul(w, 1) == w);
  CHECK(k.inv(w) == 3);
  CHECK(k.inv(1u) == 1);
  CHECK(k.frobenius(w) == 3);
  CHECK(k.sqrt(w) == 3);
  CHECK(k.artin_schreier(w) == 1);
  CHECK(k.trace(w) == 1);
  CHECK(k.trace(1) == 0);
  CHECK(k.class_witness() == 2);

  auto x = k.as_solve(1);
  REQUIRE(x.has_value());
  CHECK(*x == 2);

  CHECK(k.elem_class(1) == 0);
  CHECK(k.elem_class(w) == 2);
  CHECK(k.elem_class(3) == 2);
}

TEST_CASE("GF(8) arithmetic", "[gf2]") {
  Gf2Field k(3, 11);
  const auto a = 2u;
  CHECK(k.add(4, a) == 6);
  CHECK(k.mul(a, 4) == 3);
  CHECK(k.inv(a) == 5);
  CHECK(k.frobenius(4) == 6);
  CHECK(k.sqrt(a) == 6);
  CHECK(k.artin_schreier(a) == 6);
  CHECK(k.trace(1) == 1);
}

TEST_CASE("prime field and witnesses", "[gf2]") {
  Gf2Field f2(1, 3);
  CHECK(f2.trace(1) == 1);
  CHECK(f2.class_witness() == 1);
  CHECK_FALSE(f2.as_solve(1).has_value());
  auto z = f2.as_solve(0);
  REQUIRE(z.has_value());
  CHECK(*z == 0);

  CHECK(Gf2Field(4, 19).class_witness() == 8);
  CHECK(thrown_code([] { Gf2Field(2, 7).inv(0); }) == Err::ZeroInverse);
}

TEST_CASE("Artin-Schreier structure, exhaustive for n <= 8", "[gf2]") {
  for (unsigned n = 1; n <= 8; ++n) {
    Gf2Field k(n, kModulus[n]);
    INFO("n = " << n);

    unsigned solvable = 0, kernel = 0;
    for (std::uint32_t a = 0; a < k.order(); ++a) {
      auto x = k.as_solve(a);
      CHECK(x.has_value() == (k.trace(a) == 0));
      if (x) {
        ++solvable;
        CHECK(k.artin_schreier(*x) == a);
        CHECK((*x & 1u) == 0);
      }
      if (k.artin_schreier(a) == 0) ++kernel;
      CHECK(k.sqrt(k.frobenius(a)) == a);
      CHECK(k.frobenius(k.sqrt(a)) == a);
      CHECK(k.trace(a) <= 1);
    }
    CHECK(solvable == k.order() / 2);
    CHECK(kernel == 2u);

    CHECK(k.trace(k.class_witness()) == 1);
    for (std::uint32_t e = 0; e < k.class_witness(); ++e) CHECK(k.trace(e) == 0);
  }
}

TEST_CASE("cokernel classes", "[gf2]") {
  std::mt19937_64 rng(11);
  for (unsigned n = 1; n <= 6; ++n) {
    Gf2Field k(n, kModulus[n]);
    for (int i = 0; i < 50; ++i) {
      auto a = k.random_elem(rng);
      auto b = k.random_elem(rng);
      CHECK(k.elem_class(k.artin_schreier(a)) == 0);
      bool same = k.class_eq(k.elem_class(a), k.elem_class(b));
      CHECK(same == k.as_solve(k.add(a, b)).has_value());
      CHECK(k.class_add(k.elem_class(a), k.elem_class(b)) == k.elem_class(k.add(a, b)));
    }
  }
}

TEST_CASE("field axioms on random elements", "[gf2]") {
  std::mt19937_64 rng(99);
  for (unsigned n : {2u, 5u, 8u, 16u}) {
    Gf2Field k(n, n == 16 ? 65581u : kModulus[n]);
    for (int i = 0; i < 100; ++i) {
      auto a = k.random_elem(rng);
      auto b = k.random_elem(rng);
      auto c = k.random_elem(rng);
      CHECK(k.mul(a, b) == k.mul(b, a));
      CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
      CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
      CHECK(k.artin_schreier(k.add(a, b)) ==
            k.add(k.artin_schreier(a), k.artin_schreier(b)));
      if (!k.is_zero(a)) CHECK(k.mul(a, k.inv(a)) == 1);
    }
  }
}
