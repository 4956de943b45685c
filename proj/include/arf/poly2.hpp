#pragma once

// Univariate polynomials over F2, coefficients bit-packed 64 per word.
// Addition is XOR, multiplication is carry-less. The zero polynomial
// reports degree -1; every nonzero polynomial is monic.

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "arf/errors.hpp"

namespace arf {

class Poly2 {
 public:
  Poly2() = default;

  // Low 64 coefficients from an integer, bit i = coefficient of x^i.
  static Poly2 from_bits(std::uint64_t bits) {
    Poly2 p;
    if (bits) p.w_.push_back(bits);
    return p;
  }
  static Poly2 one() { return from_bits(1); }
  static Poly2 monomial(unsigned exp) {
    Poly2 p;
    p.set_coeff(exp, true);
    return p;
  }

  int degree() const {
    if (w_.empty()) return -1;
    return static_cast<int>(64 * (w_.size() - 1) + std::bit_width(w_.back()) - 1);
  }
  bool is_zero() const { return w_.empty(); }
  bool is_one() const { return w_.size() == 1 && w_[0] == 1; }

  bool coeff(unsigned exp) const {
    std::size_t i = exp / 64;
    return i < w_.size() && ((w_[i] >> (exp % 64)) & 1u);
  }

  Poly2& set_coeff(unsigned exp, bool value) {
    std::size_t i = exp / 64;
    if (value) {
      if (i >= w_.size()) w_.resize(i + 1, 0);
      w_[i] |= std::uint64_t{1} << (exp % 64);
    } else if (i < w_.size()) {
      w_[i] &= ~(std::uint64_t{1} << (exp % 64));
      trim();
    }
    return *this;
  }

  std::uint64_t low_bits() const { return w_.empty() ? 0 : w_[0]; }

  template <typename Fn>
  void for_each_exponent(Fn&& fn) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t word = w_[i];
      while (word) {
        unsigned b = static_cast<unsigned>(std::countr_zero(word));
        fn(static_cast<unsigned>(64 * i + b));
        word &= word - 1;
      }
    }
  }

  friend Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    r += b;
    return r;
  }
  Poly2& operator+=(const Poly2& b) {
    if (b.w_.size() > w_.size()) w_.resize(b.w_.size(), 0);
    for (std::size_t i = 0; i < b.w_.size(); ++i) w_[i] ^= b.w_[i];
    trim();
    return *this;
  }

  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 acc;
    if (a.is_zero() || b.is_zero()) return acc;
    const Poly2& small = a.degree() <= b.degree() ? a : b;
    const Poly2& big = a.degree() <= b.degree() ? b : a;
    small.for_each_exponent([&](unsigned e) { acc.xor_shifted(big, e); });
    return acc;
  }

  // x -> x^2 doubles every exponent (Frobenius on F2[x]).
  Poly2 squared() const {
    Poly2 r;
    for_each_exponent([&](unsigned e) { r.set_coeff(2 * e, true); });
    return r;
  }

  bool all_even_exponents() const {
    constexpr std::uint64_t odd_mask = 0xAAAAAAAAAAAAAAAAull;
    for (std::uint64_t word : w_)
      if (word & odd_mask) return false;
    return true;
  }

  // Inverse of squared(); valid only when all exponents are even.
  Poly2 halved_exponents() const {
    Poly2 r;
    for_each_exponent([&](unsigned e) { r.set_coeff(e / 2, true); });
    return r;
  }

  // Substitute x -> x^(2^k).
  Poly2 inflated(unsigned k) const {
    Poly2 r = *this;
    while (k--) r = r.squared();
    return r;
  }

  static std::pair<Poly2, Poly2> divmod(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) fail(Err::ZeroDenominator, "polynomial division by zero");
    Poly2 q, r = a;
    const int db = b.degree();
    while (r.degree() >= db) {
      const unsigned s = static_cast<unsigned>(r.degree() - db);
      r.xor_shifted(b, s);
      q.set_coeff(s, true);
    }
    return {q, r};
  }
  friend Poly2 operator/(const Poly2& a, const Poly2& b) { return divmod(a, b).first; }
  friend Poly2 operator%(const Poly2& a, const Poly2& b) { return divmod(a, b).second; }

  static Poly2 gcd(Poly2 a, Poly2 b) {
    while (!b.is_zero()) {
      a = a % b;
      std::swap(a, b);
    }
    return a;
  }

  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  void trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
  }

  // *this ^= src << shift
  void xor_shifted(const Poly2& src, unsigned shift) {
    const std::size_t off = shift / 64;
    const unsigned r = shift % 64;
    const std::size_t need = src.w_.size() + off + (r ? 1 : 0);
    if (need > w_.size()) w_.resize(need, 0);
    for (std::size_t i = 0; i < src.w_.size(); ++i) {
      w_[i + off] ^= src.w_[i] << r;
      if (r) w_[i + off + 1] ^= src.w_[i] >> (64 - r);
    }
    trim();
  }

  std::vector<std::uint64_t> w_;
};

}  // namespace arf
