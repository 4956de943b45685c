#pragma once

// GF(2^n) for n <= 16 in the polynomial basis, elements bit-packed in a
// uint32_t (bit i is the alpha^i coefficient). The modulus must be
// irreducible of degree exactly n; construction rejects anything else.

#include <bit>
#include <cstdint>
#include <optional>
#include <random>

#include "arf/errors.hpp"
#include "arf/f2solve.hpp"

namespace arf {

class Gf2Field {
 public:
  using Elem = std::uint32_t;
  // Canonical cokernel representative: 0 or the field's class witness.
  using Class = std::uint32_t;

  Gf2Field(unsigned n, std::uint32_t modulus) : n_(n), mod_(modulus) {
    if (n < 1 || n > 16) fail(Err::InvalidField, "extension degree must be in [1,16]");
    if (std::bit_width(modulus) != n + 1)
      fail(Err::InvalidField, "modulus degree does not match extension degree");
    for (unsigned d = 1; 2 * d <= n_; ++d)
      for (std::uint32_t f = 1u << d; f < (2u << d); ++f)
        if (poly_mod32(mod_, f) == 0)
          fail(Err::ReducibleModulus, "modulus is reducible over F2");
    init_witness();
  }

  // Skips validation. Exists solely so the selftest can inject a broken
  // modulus and show the suite catching it.
  static Gf2Field unchecked(unsigned n, std::uint32_t modulus) {
    Gf2Field k;
    k.n_ = n;
    k.mod_ = modulus;
    k.init_witness();
    return k;
  }

  unsigned n() const { return n_; }
  std::uint32_t modulus() const { return mod_; }
  std::uint32_t order() const { return 1u << n_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem add(Elem a, Elem b) const { return a ^ b; }

  Elem mul(Elem a, Elem b) const {
    std::uint32_t r = 0;
    while (b) {
      if (b & 1) r ^= a;
      a <<= 1;
      b >>= 1;
    }
    return poly_mod32(r, mod_);
  }

  Elem inv(Elem a) const {
    if (a == 0) fail(Err::ZeroInverse, "inverse of zero");
    Elem r = 1;
    for (std::uint32_t e = order() - 2; e; e >>= 1) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
    }
    return r;
  }

  Elem frobenius(Elem a) const { return mul(a, a); }

  // Frobenius is invertible here; its inverse is n-1 more squarings.
  Elem sqrt(Elem a) const {
    for (unsigned i = 1; i < n_; ++i) a = mul(a, a);
    return a;
  }

  Elem artin_schreier(Elem a) const { return mul(a, a) ^ a; }

  // x^2 + x = a is an F2-linear system in the coefficients of x.
  std::optional<Elem> as_solve(Elem a) const {
    F2System sys(n_);
    for (unsigned i = 0; i < n_; ++i) sys.add_empty_row();
    for (unsigned j = 0; j < n_; ++j) {
      Elem col = artin_schreier(Elem{1} << j);
      for (unsigned i = 0; i < n_; ++i) sys.set_entry(i, j, (col >> i) & 1);
    }
    for (unsigned i = 0; i < n_; ++i) sys.set_rhs(i, (a >> i) & 1);
    auto x = sys.solve();
    if (!x) return std::nullopt;
    Elem e = 0;
    for (unsigned i = 0; i < n_; ++i)
      if ((*x)[i]) e |= Elem{1} << i;
    // The two solutions differ by 1; report the even encoding.
    return e & ~Elem{1};
  }

  unsigned trace(Elem a) const {
    Elem r = 0;
    for (unsigned i = 0; i < n_; ++i) {
      r ^= a;
      a = mul(a, a);
    }
    return r;
  }

  Elem class_witness() const { return witness_; }

  Class elem_class(Elem a) const { return trace(a) == 0 ? 0 : witness_; }
  Class class_add(Class a, Class b) const { return elem_class(a ^ b); }
  bool class_eq(Class a, Class b) const { return a == b; }
  bool class_is_zero(Class a) const { return a == 0; }

  Elem random_elem(std::mt19937_64& rng) const {
    return static_cast<Elem>(rng() & (order() - 1));
  }

  friend bool operator==(const Gf2Field&, const Gf2Field&) = default;

 private:
  Gf2Field() = default;

  void init_witness() {
    witness_ = 1;
    for (std::uint32_t e = 0; e < order(); ++e)
      if (trace(e) == 1) {
        witness_ = e;
        return;
      }
  }

  static std::uint32_t poly_mod32(std::uint32_t a, std::uint32_t b) {
    const int db = std::bit_width(b) - 1;
    while (a && std::bit_width(a) - 1 >= db)
      a ^= b << (std::bit_width(a) - 1 - db);
    return a;
  }

  unsigned n_ = 0;
  std::uint32_t mod_ = 0;
  Elem witness_ = 1;
};

}  // namespace arf
