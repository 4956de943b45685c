// A short tour: one binary field, one form over F2(t), and the two
// routes to its invariant.

#include <cstdio>

#include "arf/expr.hpp"
#include "arf/field.hpp"
#include "arf/invariant.hpp"
#include "arf/quadform.hpp"
#include "arf/tower.hpp"

using namespace arf;

int main() {
  // GF(8) as GF(2)[x]/(x^3 + x + 1). The trace sorts elements into the
  // two Artin-Schreier classes.
  Gf2Field f8(3, 0b1011);
  std::printf("GF(8) traces:");
  for (Gf2Field::Elem a = 0; a < 8; ++a) std::printf(" %u", f8.trace(a));
  std::printf("\n");

  // The plane q(x, y) = x^2 + xy + t y^2 over F2(t).
  FuncField k0(0, 8);
  TowerElem t = parse_tower_elem("t", k0);
  QuadForm<FuncField> q(k0, standard_symplectic_gram(k0, 2), {k0.one(), t});

  auto cls = arf_invariant(q);
  std::printf("arf class: %s\n", render_elem(k0, cls.rep).c_str());
  std::printf("zero class: %s\n", k0.class_is_zero(cls) ? "yes" : "no");

  Lagrangian<FuncField> l = symplectic_lagrangian(q);
  Vec<FuncField> w = wu_vector(q, l);
  std::printf("wu vector: (%s, %s)\n", render_elem(k0, w[0]).c_str(),
              render_elem(k0, w[1]).c_str());
  std::printf("q(wu): %s\n", render_elem(k0, q.eval(w)).c_str());

  // One level up the tower t has a square root and the Wu route must
  // land on the inflated Arf class.
  FuncField k1(1, 8);
  std::printf("diagram at level 1: %s\n",
              arf_diagram_check(q, 1, k1) ? "commutes" : "broken");

  // Descent from level 1: the square lives downstairs, the witness ties
  // the two classes together.
  TowerElem x = parse_tower_elem("level=1; u^3+u", k1);
  auto d = FuncField::lemma0_descend(x);
  std::printf("descend %s -> %s\n", render_elem(k1, x).c_str(),
              render_ratfunc(d.y, 't').c_str());
  return 0;
}
