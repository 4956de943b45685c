#pragma once

// Rational functions over F2, stored as a reduced fraction. Every
// nonzero polynomial over F2 is monic, so reduced numerator/denominator
// pairs are unique and equality is componentwise.

#include <utility>

#include "arf/errors.hpp"
#include "arf/poly2.hpp"

namespace arf {

class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly2::one()) {}

  RatFunc(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(Err::ZeroDenominator, "rational function with zero denominator");
    reduce();
  }

  static RatFunc from_poly(Poly2 p) { return RatFunc(std::move(p), Poly2::one()); }

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }
  int degree() const { return num_.degree() > den_.degree() ? num_.degree() : den_.degree(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }

  RatFunc inv() const {
    if (num_.is_zero()) fail(Err::ZeroInverse, "inverse of zero");
    return RatFunc(den_, num_);
  }

  RatFunc squared() const {
    RatFunc r;
    r.num_ = num_.squared();
    r.den_ = den_.squared();
    return r;
  }

  // Membership in F2(x^2): a reduced fraction is a square iff both
  // parts use only even exponents.
  bool all_even_exponents() const {
    return num_.all_even_exponents() && den_.all_even_exponents();
  }

  RatFunc halved_exponents() const {
    RatFunc r;
    r.num_ = num_.halved_exponents();
    r.den_ = den_.halved_exponents();
    return r;
  }

  RatFunc inflated(unsigned k) const {
    RatFunc r;
    r.num_ = num_.inflated(k);
    r.den_ = den_.inflated(k);
    return r;
  }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Poly2::one();
      return;
    }
    Poly2 g = Poly2::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }

  Poly2 num_;
  Poly2 den_;
};

}  // namespace arf
