#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgt/g2.hpp"

using namespace cgt;

namespace {

int label_index(const FiniteGroup& g, const std::string& lbl) {
  for (int i = 0; i < g.order(); ++i)
    if (g.label(i) == lbl) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("one-cell composition follows the back-to-front convention") {
  auto x = inn_crossed_module(symmetric_3());
  int e = x.G->identity();
  int p12 = label_index(*x.G, "(12)");
  int p13 = label_index(*x.G, "(13)");
  int p123 = label_index(*x.G, "(123)");

  CHECK(compose_1(x, {e}, {p12}).g == p12);
  CHECK(compose_1(x, {p12}, {e}).g == p12);
  // (12) then (13) = (13)(12) = (123), by the permutation oracle
  CHECK(compose_1(x, {p12}, {p13}).g == p123);
}

TEST_CASE("vertical composition and inverses") {
  auto x = inn_crossed_module(symmetric_3());
  int e = x.G->identity();
  int p12 = label_index(*x.H, "(12)");
  int p123 = label_index(*x.H, "(123)");

  TwoCell idc{p12, x.H->identity()};
  TwoCell f{p12, p123};
  CHECK(vcompose_2(x, idc, f).h == f.h);

  // h1=(123) over e, then h2=(12) over t(h1): label is (12)(123)
  TwoCell a{e, p123};
  TwoCell b{two_cell_target(x, a), p12};
  TwoCell c = vcompose_2(x, a, b);
  CHECK(c.g == e);
  CHECK(c.h == x.H->mul(p12, p123));
  CHECK(x.H->label(c.h) == "(23)");  // permutation oracle
  CHECK(two_cell_target(x, c) == x.G->mul(x.t(c.h), e));

  // composing with the vertical inverse gives the identity 2-cell
  TwoCell ai = vinverse_2(x, a);
  CHECK(vcompose_2(x, a, ai).h == x.H->identity());

  // mismatched boundary raises
  CHECK_THROWS_AS(vcompose_2(x, a, a), validation_error);
}

TEST_CASE("horizontal composition acts through the source 1-cell") {
  auto x = inn_crossed_module(symmetric_3());
  int e = x.G->identity();
  int p12 = label_index(*x.G, "(12)");
  int p13 = label_index(*x.G, "(13)");
  int p123 = label_index(*x.H, "(123)");

  // unit on the identity object leaves a 2-cell alone
  TwoCell a{p12, p123};
  TwoCell id_e{e, x.H->identity()};
  CHECK(hcompose_2(x, a, id_e).g == a.g);
  CHECK(hcompose_2(x, a, id_e).h == a.h);

  // a = ((12),(123)), b = ((13),e): label ^{(13)}(123) over (13)(12)
  TwoCell b{p13, x.H->identity()};
  TwoCell c = hcompose_2(x, a, b);
  CHECK(c.g == x.G->mul(p13, p12));
  CHECK(c.h == x.act(p13, p123));
  // oracle: conjugation in the permutation model gives (132)
  CHECK(x.H->label(c.h) == "(132)");
}

TEST_CASE("axiom suite passes on the corpus") {
  for (auto x : {inn_crossed_module(symmetric_3()), incl_z2_z4(),
                 inn_crossed_module(cyclic_group(4))}) {
    CAPTURE(x.name);
    auto rep = check_2group_axioms(x);
    CAPTURE(rep.all_pass() ? "" : rep.first_failure()->name);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("dropping the action from hcompose breaks interchange") {
  auto x = inn_crossed_module(symmetric_3());
  // the corrupted composite multiplies labels without acting
  auto bad_h = [&](TwoCell a, TwoCell b) {
    return TwoCell{x.G->mul(b.g, a.g), x.H->mul(b.h, a.h)};
  };
  bool violated = false;
  for (int g1 = 0; g1 < 6 && !violated; ++g1)
    for (int g2 = 0; g2 < 6 && !violated; ++g2)
      for (int h1 = 0; h1 < 6 && !violated; ++h1)
        for (int h2 = 0; h2 < 6 && !violated; ++h2)
          for (int h3 = 0; h3 < 6 && !violated; ++h3)
            for (int h4 = 0; h4 < 6 && !violated; ++h4) {
              TwoCell a{g1, h1};
              TwoCell b{two_cell_target(x, a), h2};
              TwoCell c{g2, h3};
              TwoCell d{two_cell_target(x, c), h4};
              TwoCell lhs = bad_h(vcompose_2(x, a, b), vcompose_2(x, c, d));
              TwoCell va = bad_h(a, c);
              TwoCell vb = bad_h(b, d);
              if (vb.g != two_cell_target(x, va)) {
                violated = true;  // sources already fail to line up
                break;
              }
              TwoCell rhs = vcompose_2(x, va, vb);
              violated = lhs.g != rhs.g || lhs.h != rhs.h;
            }
  CHECK(violated);
}

TEST_CASE("budget errors are raised, not silently truncated") {
  auto x = inn_crossed_module(symmetric_3());
  CHECK_THROWS_AS(check_2group_axioms(x, 10), budget_error);
}
