#pragma once

// Form files are JSON objects {"field", "dim", "gram", "diag"}. The
// gram matrix is given in full and must be symmetric with a zero
// diagonal, bit-exactly. Binary-field entries are plain integers,
// function-field entries are expression strings with degree at most 16.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "arf/errors.hpp"
#include "arf/expr.hpp"
#include "arf/field.hpp"
#include "arf/linalg.hpp"
#include "arf/quadform.hpp"

namespace arf {

inline constexpr int kFormEntryDegreeCap = 16;

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open '" + path + "'");
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(Err::ParseError, "invalid JSON in '" + path + "'");
  return j;
}

inline std::string form_field_spec(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("field") || !j["field"].is_string())
    fail(Err::ParseError, "form file needs a \"field\" spec string");
  return j["field"].get<std::string>();
}

namespace detail {

inline bool json_uint(const nlohmann::json& v, std::uint64_t& out) {
  if (v.is_number_unsigned()) {
    out = v.get<std::uint64_t>();
    return true;
  }
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    out = static_cast<std::uint64_t>(v.get<std::int64_t>());
    return true;
  }
  return false;
}

inline Gf2Field::Elem form_entry(const Gf2Field& k, const nlohmann::json& v) {
  std::uint64_t e = 0;
  if (!json_uint(v, e)) fail(Err::ParseError, "binary field entries are integers");
  if (e >= k.order()) fail(Err::ParseError, "element encoding out of range");
  return static_cast<Gf2Field::Elem>(e);
}

inline TowerElem form_entry(const FuncField& K, const nlohmann::json& v) {
  if (!v.is_string()) fail(Err::ParseError, "function field entries are expression strings");
  TowerElem e = parse_tower_elem(v.get<std::string>(), K);
  if (e.value().degree() > kFormEntryDegreeCap)
    fail(Err::DegreeCapExceeded, "form entry degree above 16");
  return e;
}

inline nlohmann::json entry_json(const Gf2Field&, Gf2Field::Elem e) { return e; }
inline nlohmann::json entry_json(const FuncField& K, const TowerElem& e) {
  return render_elem(K, e);
}

}  // namespace detail

template <CharTwoField F>
QuadForm<F> form_from_json(const nlohmann::json& j, const F& k) {
  std::uint64_t dim_value = 0;
  if (!j.is_object() || !j.contains("dim") || !detail::json_uint(j["dim"], dim_value) ||
      !j.contains("gram") || !j.contains("diag"))
    fail(Err::ParseError, "form file needs dim, gram and diag");
  const std::size_t d = static_cast<std::size_t>(dim_value);
  const auto& gram_j = j["gram"];
  const auto& diag_j = j["diag"];
  if (!gram_j.is_array() || gram_j.size() != d || !diag_j.is_array() || diag_j.size() != d)
    fail(Err::ParseError, "gram/diag shape does not match dim");
  Mat<F> gram(d, d, k.zero());
  for (std::size_t i = 0; i < d; ++i) {
    if (!gram_j[i].is_array() || gram_j[i].size() != d)
      fail(Err::ParseError, "gram must be a full dim x dim matrix");
    for (std::size_t jj = 0; jj < d; ++jj)
      gram.at(i, jj) = detail::form_entry(k, gram_j[i][jj]);
  }
  Vec<F> diag;
  diag.reserve(d);
  for (std::size_t i = 0; i < d; ++i) diag.push_back(detail::form_entry(k, diag_j[i]));
  return QuadForm<F>(k, std::move(gram), std::move(diag));
}

template <CharTwoField F>
nlohmann::json form_to_json(const QuadForm<F>& q, const std::string& field_spec) {
  nlohmann::json j;
  j["field"] = field_spec;
  j["dim"] = q.dim();
  nlohmann::json gram = nlohmann::json::array();
  for (std::size_t i = 0; i < q.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t jj = 0; jj < q.dim(); ++jj)
      row.push_back(detail::entry_json(q.field(), q.gram().at(i, jj)));
    gram.push_back(row);
  }
  j["gram"] = gram;
  nlohmann::json diag = nlohmann::json::array();
  for (const auto& v : q.diag()) diag.push_back(detail::entry_json(q.field(), v));
  j["diag"] = diag;
  return j;
}

}  // namespace arf
