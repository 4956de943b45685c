#pragma once

// Element syntax. Polynomials are sums of terms '1', 't', 't^k' (or u
// at tower levels >= 1), rational functions are '(poly)/(poly)', tower
// elements carry a 'level=<m>; ' prefix. The zero polynomial is written
// '0', which the term grammar cannot otherwise express. Exponents are
// capped at 64 on input. Variable use must match the level: t at level
// 0, u above.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "arf/errors.hpp"
#include "arf/field.hpp"
#include "arf/gf2.hpp"
#include "arf/poly2.hpp"
#include "arf/ratfunc.hpp"
#include "arf/tower.hpp"

namespace arf {

inline constexpr unsigned kInputDegreeCap = 64;

namespace detail {

class ExprScanner {
 public:
  explicit ExprScanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool done() {
    skip_ws();
    return pos_ == s_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) fail(Err::ParseError, std::string("expected ") + what);
  }

  unsigned long read_uint() {
    skip_ws();
    unsigned long v = 0;
    auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{} || p == s_.data() + pos_)
      fail(Err::ParseError, "expected an exponent");
    pos_ = static_cast<std::size_t>(p - s_.data());
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline Poly2 parse_poly(ExprScanner& sc, char var) {
  Poly2 p;
  for (;;) {
    char c = sc.peek();
    if (c == '0') {
      sc.accept('0');
    } else if (c == '1') {
      sc.accept('1');
      p += Poly2::one();
    } else if (c == var) {
      sc.accept(var);
      unsigned long e = 1;
      if (sc.accept('^')) e = sc.read_uint();
      if (e > kInputDegreeCap) fail(Err::DegreeCapExceeded, "exponent above the input cap");
      p += Poly2::monomial(static_cast<unsigned>(e));
    } else if (c == 't' || c == 'u') {
      fail(Err::ParseError, std::string("variable '") + c + "' not allowed at this level");
    } else {
      fail(Err::ParseError, "expected a term");
    }
    if (!sc.accept('+')) return p;
  }
}

}  // namespace detail

inline RatFunc parse_ratfunc(std::string_view s, char var) {
  detail::ExprScanner sc(s);
  RatFunc r;
  if (sc.peek() == '(') {
    sc.expect('(', "'('");
    Poly2 num = detail::parse_poly(sc, var);
    sc.expect(')', "')'");
    sc.expect('/', "'/'");
    sc.expect('(', "'('");
    Poly2 den = detail::parse_poly(sc, var);
    sc.expect(')', "')'");
    r = RatFunc(num, den);
  } else {
    r = RatFunc::from_poly(detail::parse_poly(sc, var));
  }
  if (!sc.done()) fail(Err::ParseError, "trailing input after expression");
  return r;
}

// Accepts 'level=<m>; <ratfunc>' or, for m = 0, a bare rational
// function in t.
inline TowerElem parse_tower_elem(std::string_view s, const FuncField& K) {
  std::string_view body = s;
  unsigned long level = 0;
  auto sv = std::string_view(s);
  std::size_t start = sv.find_first_not_of(" \t");
  if (start != std::string_view::npos && sv.substr(start).starts_with("level=")) {
    sv = sv.substr(start + 6);
    auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), level);
    if (ec != std::errc{}) fail(Err::ParseError, "bad level tag");
    sv = sv.substr(static_cast<std::size_t>(p - sv.data()));
    std::size_t semi = sv.find(';');
    if (semi == std::string_view::npos) fail(Err::ParseError, "missing ';' after level tag");
    if (sv.find_first_not_of(" \t") != semi) fail(Err::ParseError, "bad level tag");
    body = sv.substr(semi + 1);
  }
  if (level > K.level()) fail(Err::ParseError, "element level above the field level");
  return TowerElem(static_cast<unsigned>(level),
                   parse_ratfunc(body, level == 0 ? 't' : 'u'));
}

inline Gf2Field::Elem parse_gf2_elem(std::string_view s, const Gf2Field& k) {
  detail::ExprScanner sc(s);
  unsigned long v = sc.read_uint();
  if (!sc.done()) fail(Err::ParseError, "trailing input after element");
  if (v >= k.order()) fail(Err::ParseError, "element encoding out of range");
  return static_cast<Gf2Field::Elem>(v);
}

inline std::string render_poly(const Poly2& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = p.degree(); e >= 0; --e) {
    if (!p.coeff(static_cast<unsigned>(e))) continue;
    if (!out.empty()) out += '+';
    if (e == 0)
      out += '1';
    else if (e == 1)
      out += var;
    else {
      out += var;
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

inline std::string render_ratfunc(const RatFunc& r, char var) {
  if (r.is_poly()) return render_poly(r.num(), var);
  return "(" + render_poly(r.num(), var) + ")/(" + render_poly(r.den(), var) + ")";
}

// Renders at the element's own minimal level. Level-0 elements render
// as bare rational functions in t, which parse back identically under
// any field; higher levels need the tag for the round trip.
inline std::string render_tower_elem(const TowerElem& e, const FuncField&) {
  if (e.level() == 0) return render_ratfunc(e.value(), 't');
  return "level=" + std::to_string(e.level()) + "; " + render_ratfunc(e.value(), 'u');
}

inline std::string render_elem(const Gf2Field&, Gf2Field::Elem e) {
  return std::to_string(e);
}

inline std::string render_elem(const FuncField& K, const TowerElem& e) {
  return render_tower_elem(e, K);
}

}  // namespace arf
