#pragma once

// The common shape of the supported characteristic-2 coefficient
// fields, plus parsing of field spec strings.

#include <cctype>
#include <charconv>
#include <concepts>
#include <random>
#include <string>
#include <variant>

#include "arf/errors.hpp"
#include "arf/gf2.hpp"
#include "arf/tower.hpp"

namespace arf {

template <class F>
concept CharTwoField =
    requires(const F k, const typename F::Elem a, const typename F::Elem b,
             const typename F::Class c, const typename F::Class d, std::mt19937_64 rng) {
      { k.zero() } -> std::same_as<typename F::Elem>;
      { k.one() } -> std::same_as<typename F::Elem>;
      { k.add(a, b) } -> std::same_as<typename F::Elem>;
      { k.mul(a, b) } -> std::same_as<typename F::Elem>;
      { k.inv(a) } -> std::same_as<typename F::Elem>;
      { k.frobenius(a) } -> std::same_as<typename F::Elem>;
      { k.sqrt(a) } -> std::same_as<typename F::Elem>;
      { k.artin_schreier(a) } -> std::same_as<typename F::Elem>;
      { k.eq(a, b) } -> std::same_as<bool>;
      { k.is_zero(a) } -> std::same_as<bool>;
      { k.elem_class(a) } -> std::same_as<typename F::Class>;
      { k.class_add(c, d) } -> std::same_as<typename F::Class>;
      { k.class_eq(c, d) } -> std::same_as<bool>;
      { k.class_is_zero(c) } -> std::same_as<bool>;
      { k.random_elem(rng) } -> std::same_as<typename F::Elem>;
    };

static_assert(CharTwoField<Gf2Field>);
static_assert(CharTwoField<FuncField>);

using FieldCtx = std::variant<Gf2Field, FuncField>;

namespace detail {

inline bool parse_uint(std::string_view s, unsigned long& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace detail

// Accepted spec strings: gf2:<n>:<modulus-decimal>, f2t, f2t-tower:<m>.
inline FieldCtx parse_field_spec(const std::string& spec,
                                 unsigned level_cap = kDefaultLevelCap) {
  if (spec == "f2t") return FuncField(0, level_cap);
  if (spec.starts_with("f2t-tower:")) {
    unsigned long m;
    if (!detail::parse_uint(std::string_view(spec).substr(10), m))
      fail(Err::ParseError, "bad tower level in field spec '" + spec + "'");
    return FuncField(static_cast<unsigned>(m), level_cap);
  }
  if (spec.starts_with("gf2:")) {
    std::string_view rest = std::string_view(spec).substr(4);
    auto colon = rest.find(':');
    unsigned long n, mod;
    if (colon == std::string_view::npos || !detail::parse_uint(rest.substr(0, colon), n) ||
        !detail::parse_uint(rest.substr(colon + 1), mod))
      fail(Err::ParseError, "bad binary field spec '" + spec + "'");
    if (n > 16 || mod > 0x1FFFF) fail(Err::InvalidField, "field spec out of range");
    return Gf2Field(static_cast<unsigned>(n), static_cast<std::uint32_t>(mod));
  }
  fail(Err::ParseError, "unknown field spec '" + spec + "'");
}

inline std::string field_spec_string(const FieldCtx& ctx) {
  if (const auto* k = std::get_if<Gf2Field>(&ctx))
    return "gf2:" + std::to_string(k->n()) + ":" + std::to_string(k->modulus());
  const auto& K = std::get<FuncField>(ctx);
  if (K.level() == 0) return "f2t";
  return "f2t-tower:" + std::to_string(K.level());
}

}  // namespace arf
