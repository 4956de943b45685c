#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "arf/form_io.hpp"
#include "generators.hpp"

using namespace arf;
using nlohmann::json;

namespace {

Err thrown_code(auto&& fn) {
  try {
    fn();
  } catch (const ArfError& e) {
    return e.code();
  }
  FAIL("expected ArfError");
  return Err::ParseError;
}

json hyperbolic_gf4() {
  json j;
  j["field"] = "gf2:2:7";
  j["dim"] = 2;
  j["gram"] = {{0, 1}, {1, 0}};
  j["diag"] = {1, 2};
  return j;
}

}  // namespace

TEST_CASE("binary field form from json", "[form_io]") {
  Gf2Field k(2, 7);
  json j = hyperbolic_gf4();
  CHECK(form_field_spec(j) == "gf2:2:7");
  QuadForm<Gf2Field> q = form_from_json(j, k);
  CHECK(q.dim() == 2);
  CHECK(q.gram().at(0, 1) == 1u);
  CHECK(q.diag()[1] == 2u);
  CHECK(form_to_json(q, "gf2:2:7") == j);
}

TEST_CASE("function field form from json", "[form_io]") {
  FuncField K(1);
  json j;
  j["field"] = "f2t-tower:1";
  j["dim"] = 2;
  j["gram"] = json::array({json::array({"0", "t+1"}), json::array({"t+1", "0"})});
  j["diag"] = {"(1)/(t)", "level=1; u"};
  QuadForm<FuncField> q = form_from_json(j, K);
  CHECK(q.gram().at(1, 0) == TowerElem(0, RatFunc::from_poly(Poly2::from_bits(0b11))));
  CHECK(q.diag()[0] == TowerElem(0, RatFunc(Poly2::one(), Poly2::monomial(1))));
  CHECK(q.diag()[1] == TowerElem(1, RatFunc::from_poly(Poly2::monomial(1))));

  // Entries above level 0 carry their level tag when rendered.
  json tagged;
  tagged["field"] = "f2t-tower:1";
  tagged["dim"] = 2;
  tagged["gram"] = json::array({json::array({"0", "t+1"}), json::array({"t+1", "0"})});
  tagged["diag"] = {"(1)/(t)", "level=1; u"};
  CHECK(form_to_json(q, "f2t-tower:1") == tagged);
  QuadForm<FuncField> back = form_from_json(tagged, K);
  CHECK(back.gram() == q.gram());
  CHECK(back.diag() == q.diag());
}

TEST_CASE("form json round trip on random forms", "[form_io]") {
  std::mt19937_64 rng(0x50f1e);
  Gf2Field k(3, 11);
  for (int it = 0; it < 25; ++it) {
    QuadForm<Gf2Field> q = testgen::random_nondeg_form(k, 4, rng);
    QuadForm<Gf2Field> back = form_from_json(form_to_json(q, "gf2:3:11"), k);
    CHECK(back.gram() == q.gram());
    CHECK(back.diag() == q.diag());
  }
  FuncField K(0);
  for (int it = 0; it < 10; ++it) {
    QuadForm<FuncField> q = testgen::random_poly_form(K, 4, 3, rng);
    QuadForm<FuncField> back = form_from_json(form_to_json(q, "f2t"), K);
    CHECK(back.gram() == q.gram());
    CHECK(back.diag() == q.diag());
  }
}

TEST_CASE("form file io", "[form_io]") {
  auto path = std::filesystem::temp_directory_path() / "arf_form_io_test.json";
  {
    std::ofstream out(path);
    out << hyperbolic_gf4().dump(2) << "\n";
  }
  json j = read_json_file(path.string());
  CHECK(j == hyperbolic_gf4());
  std::filesystem::remove(path);

  CHECK(thrown_code([&] { read_json_file(path.string()); }) == Err::ParseError);
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK(thrown_code([&] { read_json_file(path.string()); }) == Err::ParseError);
  std::filesystem::remove(path);
}

TEST_CASE("form json validation", "[form_io]") {
  Gf2Field k(2, 7);
  FuncField K(0);

  json no_field = hyperbolic_gf4();
  no_field.erase("field");
  CHECK(thrown_code([&] { form_field_spec(no_field); }) == Err::ParseError);

  json no_dim = hyperbolic_gf4();
  no_dim.erase("dim");
  CHECK(thrown_code([&] { form_from_json(no_dim, k); }) == Err::ParseError);

  json ragged = hyperbolic_gf4();
  ragged["gram"] = {{0, 1, 0}, {1, 0}};
  CHECK(thrown_code([&] { form_from_json(ragged, k); }) == Err::ParseError);

  json asym = hyperbolic_gf4();
  asym["gram"] = {{0, 1}, {2, 0}};
  CHECK(thrown_code([&] { form_from_json(asym, k); }) == Err::InvalidForm);

  json diag_gram = hyperbolic_gf4();
  diag_gram["gram"] = {{1, 1}, {1, 0}};
  CHECK(thrown_code([&] { form_from_json(diag_gram, k); }) == Err::InvalidForm);

  json big = hyperbolic_gf4();
  big["diag"] = {1, 9};
  CHECK(thrown_code([&] { form_from_json(big, k); }) == Err::ParseError);

  json negative = hyperbolic_gf4();
  negative["diag"] = {1, -2};
  CHECK(thrown_code([&] { form_from_json(negative, k); }) == Err::ParseError);

  json func = hyperbolic_gf4();
  func["field"] = "f2t";
  func["gram"] = json::array({json::array({"0", "1"}), json::array({"1", "0"})});
  func["diag"] = {"1", "t^17"};
  CHECK(thrown_code([&] { form_from_json(func, K); }) == Err::DegreeCapExceeded);
  func["diag"] = {"1", "t^16"};
  CHECK_NOTHROW(form_from_json(func, K));
  func["diag"] = {"1", 3};
  CHECK(thrown_code([&] { form_from_json(func, K); }) == Err::ParseError);
  func["diag"] = {"1", "t+"};
  CHECK(thrown_code([&] { form_from_json(func, K); }) == Err::ParseError);
}
