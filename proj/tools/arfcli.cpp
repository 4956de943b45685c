// Batch front end. Exit codes: 0 for success, 1 for a mathematical
// "no" (class-eq false, as-solve absent, diagram-check false, selftest
// failures), 2 for errors of any kind. Machine output is JSON with the
// fields {verb, field, result, witnesses}; elements use the same
// encodings as form files.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arf/errors.hpp"
#include "arf/expr.hpp"
#include "arf/field.hpp"
#include "arf/form_io.hpp"
#include "arf/invariant.hpp"
#include "arf/quadform.hpp"
#include "arf/selftest.hpp"

using nlohmann::json;
using namespace arf;

namespace {

struct Options {
  bool machine = false;
  unsigned level_cap = kDefaultLevelCap;
};

Gf2Field::Elem parse_elem(const Gf2Field& k, const std::string& s) {
  return parse_gf2_elem(s, k);
}
TowerElem parse_elem(const FuncField& k, const std::string& s) {
  return parse_tower_elem(s, k);
}

Gf2Field::Elem class_rep(const Gf2Field&, Gf2Field::Class c) { return c; }
const TowerElem& class_rep(const FuncField&, const FuncField::Class& c) { return c.rep; }

template <CharTwoField F>
json vec_json(const F& k, const Vec<F>& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(arf::detail::entry_json(k, e));
  return a;
}

template <CharTwoField F>
std::string render_vec(const F& k, const Vec<F>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) out += ", ";
    out += render_elem(k, v[i]);
  }
  return out + "]";
}

void emit(const Options& opt, const std::string& verb, const json& field_spec, json result,
          json witnesses, const std::vector<std::string>& human) {
  if (opt.machine) {
    json out;
    out["verb"] = verb;
    out["field"] = field_spec;
    out["result"] = std::move(result);
    out["witnesses"] = std::move(witnesses);
    std::printf("%s\n", out.dump(2).c_str());
    return;
  }
  for (const auto& line : human) std::printf("%s\n", line.c_str());
}

// The form file's field spec is authoritative; a --field flag, when
// given, must match it verbatim.
std::string resolve_spec(const std::string& file_spec, const std::string& flag_spec) {
  if (!flag_spec.empty() && flag_spec != file_spec)
    fail(Err::ContextMismatch, "--field '" + flag_spec + "' does not match the form file's '" +
                                   file_spec + "'");
  return file_spec;
}

template <class Fn>
int with_form(const Options& opt, const std::string& path, const std::string& flag_spec,
              Fn&& fn) {
  json j = read_json_file(path);
  const std::string spec = resolve_spec(form_field_spec(j), flag_spec);
  FieldCtx ctx = parse_field_spec(spec, opt.level_cap);
  return std::visit([&](const auto& k) { return fn(spec, k, form_from_json(j, k)); }, ctx);
}

template <CharTwoField F>
int run_arf(const Options& opt, const std::string& spec, const F& k, const QuadForm<F>& q) {
  auto cls = arf_invariant(q);
  const auto& rep = class_rep(k, cls);
  const bool zero = k.class_is_zero(cls);
  emit(opt, "arf", spec, json{{"class", arf::detail::entry_json(k, rep)}, {"zero", zero}},
       json::object(),
       {"class: " + render_elem(k, rep), std::string("zero: ") + (zero ? "yes" : "no")});
  return 0;
}

template <CharTwoField F>
int run_parf(const Options& opt, const std::string& spec, const F& k, const QuadForm<F>& q) {
  Lagrangian<F> l = symplectic_lagrangian(q);
  Vec<F> w = wu_vector(q, l);
  auto cls = lemma1_class(q, l, w);
  const auto& rep = class_rep(k, cls);
  const bool zero = k.class_is_zero(cls);
  json wit{{"wu_vector", vec_json(k, w)},
           {"q_of_wu", arf::detail::entry_json(k, q.eval(w))}};
  emit(opt, "parf", spec, json{{"class", arf::detail::entry_json(k, rep)}, {"zero", zero}},
       std::move(wit),
       {"class: " + render_elem(k, rep), std::string("zero: ") + (zero ? "yes" : "no"),
        "wu vector: " + render_vec(k, w)});
  return 0;
}

template <CharTwoField F>
int run_symplectic(const Options& opt, const std::string& spec, const F& k,
                   const QuadForm<F>& q) {
  Mat<F> m = symplectic_basis(q);
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(arf::detail::entry_json(k, m.at(i, j)));
    rows.push_back(std::move(row));
  }
  json diag = json::array();
  Vec<F> diag_vec;
  for (std::size_t j = 0; j < m.cols(); ++j) diag_vec.push_back(q.eval(m.col(j)));
  for (const auto& e : diag_vec) diag.push_back(arf::detail::entry_json(k, e));
  std::vector<std::string> human{"basis matrix (columns e1, f1, e2, f2, ...):"};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string line = "  ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) line += "  ";
      line += render_elem(k, m.at(i, j));
    }
    human.push_back(line);
  }
  human.push_back("diag in that basis: " + render_vec(k, diag_vec));
  emit(opt, "symplectic", spec, json{{"basis", std::move(rows)}, {"diag_in_basis", std::move(diag)}},
       json::object(), human);
  return 0;
}

template <CharTwoField F>
int run_witt(const Options& opt, const std::string& spec, [[maybe_unused]] const F& k,
             const QuadForm<F>& q) {
  if constexpr (std::is_same_v<F, FuncField>) {
    fail(Err::InvalidField, "Witt classification is only available over binary fields");
  } else {
    auto [planes, residue] = witt_decompose(q);
    WittClass wc = witt_class(q);
    emit(opt, "witt", spec,
         json{{"arf_bit", wc.arf_bit},
              {"anisotropic_dim", wc.n_residue},
              {"hyperbolic_count", planes}},
         json::object(),
         {"hyperbolic planes: " + std::to_string(planes),
          "anisotropic dim: " + std::to_string(wc.n_residue),
          "arf bit: " + std::to_string(wc.arf_bit)});
    return 0;
  }
}

int run_as_solve(const Options& opt, const std::string& spec, const std::string& expr) {
  FieldCtx ctx = parse_field_spec(spec, opt.level_cap);
  return std::visit(
      [&](const auto& k) {
        auto a = parse_elem(k, expr);
        auto s = k.as_solve(a);
        if (s) {
          emit(opt, "as-solve", spec,
               json{{"present", true}, {"solution", arf::detail::entry_json(k, *s)}},
               json::object(), {"solution: " + render_elem(k, *s)});
          return 0;
        }
        emit(opt, "as-solve", spec, json{{"present", false}, {"solution", nullptr}},
             json::object(), {"absent"});
        return 1;
      },
      ctx);
}

int run_class_eq(const Options& opt, const std::string& spec, const std::string& lhs,
                 const std::string& rhs) {
  FieldCtx ctx = parse_field_spec(spec, opt.level_cap);
  return std::visit(
      [&](const auto& k) {
        auto a = parse_elem(k, lhs);
        auto b = parse_elem(k, rhs);
        const bool equal = k.class_eq(k.elem_class(a), k.elem_class(b));
        auto c = k.as_solve(k.add(a, b));
        json wit{{"preimage", c ? arf::detail::entry_json(k, *c) : json(nullptr)}};
        std::vector<std::string> human{std::string("equal: ") + (equal ? "yes" : "no")};
        if (c) human.push_back("preimage of lhs+rhs: " + render_elem(k, *c));
        emit(opt, "class-eq", spec, json{{"equal", equal}}, std::move(wit), human);
        return equal ? 0 : 1;
      },
      ctx);
}

int run_descend(const Options& opt, const std::string& spec, const std::string& expr) {
  FieldCtx ctx = parse_field_spec(spec, opt.level_cap);
  if (!std::holds_alternative<FuncField>(ctx))
    fail(Err::InvalidField, "descend needs a tower field spec");
  const FuncField& k = std::get<FuncField>(ctx);
  TowerElem x = parse_elem(k, expr);
  auto d = FuncField::lemma0_descend(x);
  const FuncField base(0, opt.level_cap);
  TowerElem y = TowerElem::from_ratfunc(d.y);
  emit(opt, "descend", spec,
       json{{"y", arf::detail::entry_json(base, y)}, {"level", x.level()}},
       json{{"w", arf::detail::entry_json(k, d.w)}},
       {"y: " + render_elem(base, y), "witness: " + render_elem(k, d.w)});
  return 0;
}

int run_diagram_check(const Options& opt, const std::string& path,
                      const std::string& flag_spec, unsigned level) {
  json j = read_json_file(path);
  const std::string spec = resolve_spec(form_field_spec(j), flag_spec);
  FieldCtx ctx = parse_field_spec(spec, opt.level_cap);
  const auto* base = std::get_if<FuncField>(&ctx);
  if (base == nullptr || base->level() != 0)
    fail(Err::InvalidField, "diagram check starts from a form over f2t");
  QuadForm<FuncField> q = form_from_json(j, *base);
  const FuncField up(level, opt.level_cap);
  auto arf0 = arf_invariant(q);
  auto d0 = FuncField::lemma0_descend(arf0.rep);
  auto left = up.lemma0_forward(d0.y, level);
  auto right = parf(q.with_field(up));
  const bool ok = up.class_eq(left, right);
  emit(opt, "diagram-check", spec, json{{"commutes", ok}, {"level", level}},
       json{{"arf_route", arf::detail::entry_json(up, left.rep)},
            {"wu_route", arf::detail::entry_json(up, right.rep)}},
       {std::string("commutes: ") + (ok ? "yes" : "no"),
        "arf route class: " + render_elem(up, left.rep),
        "wu route class: " + render_elem(up, right.rep)});
  return ok ? 0 : 1;
}

int run_selftest(const Options& opt, const selftest::Config& cfg) {
  const auto results = selftest::run(cfg);
  const bool ok = selftest::all_passed(results);
  unsigned passed = 0;
  for (const auto& r : results) passed += r.pass ? 1u : 0u;
  if (opt.machine) {
    json checks = json::array();
    for (const auto& r : results)
      checks.push_back(json{{"id", r.id},
                            {"suite", r.suite},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"detail", r.detail}});
    emit(opt, "selftest", json(nullptr),
         json{{"passed", ok}, {"checks_passed", passed}, {"checks_total", results.size()}},
         json{{"checks", std::move(checks)}}, {});
    return ok ? 0 : 1;
  }
  static const char* const kSuites[] = {"gf2n", "Lemme 0", "Lemme 1", "Proposition",
                                        "Théorème de Arf"};
  for (const char* suite : kSuites)
    for (const auto& r : results)
      if (r.suite == suite)
        std::printf("[%s] %s :: %s: %s\n", r.pass ? "PASS" : "FAIL", r.suite.c_str(),
                    r.name.c_str(), r.detail.c_str());
  std::printf("selftest: %u/%zu checks passed\n", passed, results.size());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (const char* env = std::getenv("ARF_MAX_LEVEL")) {
    std::string_view sv(env);
    unsigned v = 0;
    auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec != std::errc{} || p != sv.data() + sv.size() || v > 16) {
      std::fprintf(stderr, "error InvalidField: ARF_MAX_LEVEL must be an integer in [0, 16]\n");
      return 2;
    }
    opt.level_cap = v;
  }

  CLI::App app{"Arf invariants of quadratic forms in characteristic 2"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.machine, "machine-readable JSON output");

  std::string field_spec, form_path, expr, lhs, rhs;
  unsigned level = 1;
  selftest::Config cfg;
  bool quick = false, corrupt = false;

  CLI::App* arf_cmd = app.add_subcommand("arf", "Arf class of a form file");
  CLI::App* parf_cmd = app.add_subcommand("parf", "Wu-vector route to the class");
  CLI::App* sympl_cmd = app.add_subcommand("symplectic", "symplectic basis of a form file");
  CLI::App* witt_cmd = app.add_subcommand("witt", "Witt decomposition over a binary field");
  for (CLI::App* c : {arf_cmd, parf_cmd, sympl_cmd, witt_cmd}) {
    c->add_option("--form", form_path, "form file (JSON)")->required();
    c->add_option("--field", field_spec, "field spec; must match the form file");
  }

  CLI::App* assolve_cmd = app.add_subcommand("as-solve", "solve c^2 + c = a");
  assolve_cmd->add_option("--field", field_spec, "field spec")->required();
  assolve_cmd->add_option("--expr", expr, "element expression")->required();

  CLI::App* classeq_cmd = app.add_subcommand("class-eq", "compare cokernel classes");
  classeq_cmd->add_option("--field", field_spec, "field spec")->required();
  classeq_cmd->add_option("--lhs", lhs, "left element")->required();
  classeq_cmd->add_option("--rhs", rhs, "right element")->required();

  CLI::App* descend_cmd = app.add_subcommand("descend", "descend a tower element to F2(t)");
  descend_cmd->add_option("--field", field_spec, "tower field spec")->required();
  descend_cmd->add_option("--expr", expr, "element expression")->required();

  CLI::App* diagram_cmd =
      app.add_subcommand("diagram-check", "compare the two routes to a class at a level");
  diagram_cmd->add_option("--form", form_path, "form file over f2t")->required();
  diagram_cmd->add_option("--field", field_spec, "field spec; must match the form file");
  diagram_cmd->add_option("--level", level, "tower level for the Wu route")->required();

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  selftest_cmd->add_option("--seed", cfg.seed, "seed for the randomized checks");
  selftest_cmd->add_flag("--quick", quick, "one tenth of the iteration counts");
  selftest_cmd->add_flag("--corrupt-modulus", corrupt,
                         "negative control: break the GF(4) context");

  for (CLI::App* c : {arf_cmd, parf_cmd, sympl_cmd, witt_cmd, assolve_cmd, classeq_cmd,
                      descend_cmd, diagram_cmd, selftest_cmd})
    c->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*arf_cmd)
      return with_form(opt, form_path, field_spec, [&](const std::string& spec, const auto& k,
                                                       const auto& q) {
        return run_arf(opt, spec, k, q);
      });
    if (*parf_cmd)
      return with_form(opt, form_path, field_spec, [&](const std::string& spec, const auto& k,
                                                       const auto& q) {
        return run_parf(opt, spec, k, q);
      });
    if (*sympl_cmd)
      return with_form(opt, form_path, field_spec, [&](const std::string& spec, const auto& k,
                                                       const auto& q) {
        return run_symplectic(opt, spec, k, q);
      });
    if (*witt_cmd)
      return with_form(opt, form_path, field_spec, [&](const std::string& spec, const auto& k,
                                                       const auto& q) {
        return run_witt(opt, spec, k, q);
      });
    if (*assolve_cmd) return run_as_solve(opt, field_spec, expr);
    if (*classeq_cmd) return run_class_eq(opt, field_spec, lhs, rhs);
    if (*descend_cmd) return run_descend(opt, field_spec, expr);
    if (*diagram_cmd) return run_diagram_check(opt, form_path, field_spec, level);
    if (*selftest_cmd) {
      cfg.quick = quick;
      cfg.corrupt_modulus = corrupt;
      return run_selftest(opt, cfg);
    }
  } catch (const ArfError& e) {
    std::fprintf(stderr, "error %s: %s\n", err_name(e.code()), e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
