#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgt/inn.hpp"

using namespace cgt;

namespace {

int label_index(const FiniteGroup& g, const std::string& lbl) {
  for (int i = 0; i < g.order(); ++i)
    if (g.label(i) == lbl) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("cell counts follow |G| and |G|^2|H|") {
  SUBCASE("trivial") {
    auto inn = build_inn(inn_crossed_module(trivial_group()));
    CHECK(inn.n_obj == 1);
    CHECK(inn.n_mor1 == 1);
    CHECK(inn.n_mor2 == 1);
  }
  SUBCASE("z2 in z4") {
    auto inn = build_inn(incl_z2_z4());
    CHECK(inn.n_obj == 4);
    CHECK(inn.n_mor1 == 32);
  }
  SUBCASE("s3") {
    auto inn = build_inn(inn_crossed_module(symmetric_3()));
    CHECK(inn.n_obj == 6);
    CHECK(inn.n_mor1 == 216);
  }
  SUBCASE("budget cap") {
    CHECK_THROWS_AS(build_inn(inn_crossed_module(symmetric_3()), 100),
                    budget_error);
  }
}

TEST_CASE("composition of 1-cells") {
  auto x = inn_crossed_module(symmetric_3());
  int e = x.G->identity();
  int p12 = label_index(*x.G, "(12)");
  int p13 = label_index(*x.G, "(13)");
  int p123 = label_index(*x.G, "(123)");

  SUBCASE("identity 1-cell is neutral") {
    InnCell1 m{p12, p123, e};
    CHECK(compose_mor1(x, id_mor1(x, e), m) == m);
    CHECK(compose_mor1(x, m, id_mor1(x, target_mor1(x, m))) == m);
  }
  SUBCASE("frozen semidirect composite from the identity object") {
    InnCell1 a{p12, p123, e};
    InnCell1 b{p13, p12, target_mor1(x, a)};
    InnCell1 c = compose_mor1(x, a, b);
    CHECK(c.f == p123);
    CHECK(c.F == p13);
    CHECK(c.src == e);
    // the boundary map t(F) f matches the composite of boundaries
    CHECK(x.G->mul(x.t(c.F), c.f) == p12);
  }
  SUBCASE("inverses") {
    InnCell1 m{p12, p123, p13};
    CHECK(compose_mor1(x, m, inverse_mor1(x, m)) == id_mor1(x, m.src));
    CHECK(compose_mor1(x, inverse_mor1(x, m), m) ==
          id_mor1(x, target_mor1(x, m)));
  }
  SUBCASE("mismatched boundaries raise") {
    InnCell1 a{p12, p123, e};
    CHECK_THROWS_AS(compose_mor1(x, a, a), validation_error);
  }
}

TEST_CASE("whiskering by objects") {
  auto x = inn_crossed_module(symmetric_3());
  int e = x.G->identity();
  int p12 = label_index(*x.G, "(12)");
  int p13 = label_index(*x.G, "(13)");
  int p123 = label_index(*x.H, "(123)");
  InnCell1 m{p12, p123, e};

  SUBCASE("identity object is neutral") {
    CHECK(whisker_obj_left(x, {e}, m) == m);
    CHECK(whisker_obj_right(x, m, {e}) == m);
  }
  SUBCASE("left whiskers compose via the group") {
    for (int g = 0; g < 6; ++g)
      for (int g2 = 0; g2 < 6; ++g2) {
        auto twice = whisker_obj_left(x, {g2}, whisker_obj_left(x, {g}, m));
        auto once = whisker_obj_left(x, {x.G->mul(g2, g)}, m);
        CHECK(twice == once);
      }
  }
  SUBCASE("right whisker conjugates the triangle") {
    auto w = whisker_obj_right(x, m, {p13});
    // frozen: the f-component becomes (13)(12)(13)
    CHECK(w.f == x.G->mul(p13, x.G->mul(p12, p13)));
    CHECK(w.F == x.act(p13, p123));
    CHECK(w.src == p13);
  }
}

TEST_CASE("monoidal product of 1-cells") {
  auto x = inn_crossed_module(symmetric_3());
  int e = x.G->identity();
  int p12 = label_index(*x.G, "(12)");
  int p123 = label_index(*x.G, "(123)");
  int p132 = label_index(*x.G, "(132)");

  SUBCASE("identity 1-cell on the identity object is the unit") {
    InnCell1 a{p12, p123, p132};
    CHECK(tensor_mor1(x, a, id_mor1(x, e)) == a);
    CHECK(tensor_mor1(x, id_mor1(x, e), a) == a);
  }
  SUBCASE("product of identity cells is the identity on the product") {
    for (int q1 = 0; q1 < 6; ++q1)
      for (int q2 = 0; q2 < 6; ++q2)
        CHECK(tensor_mor1(x, id_mor1(x, q2), id_mor1(x, q1)) ==
              id_mor1(x, x.G->mul(q2, q1)));
  }
  SUBCASE("frozen product value") {
    // outer factor ((12), e; (123)) with inner (e, (123); e)
    InnCell1 a{p12, x.H->identity(), p123};
    InnCell1 b{e, label_index(*x.H, "(123)"), e};
    InnCell1 t = tensor_mor1(x, a, b);
    CHECK(t.src == p123);
    CHECK(t.f == p12);
    CHECK(x.H->label(t.F) == "(132)");  // ^{(12)(123)}(123), conjugation oracle
  }
}

TEST_CASE("2-cells are boundary pairs with a forced label") {
  auto x = inn_crossed_module(symmetric_3());
  auto inn = build_inn(x);

  SUBCASE("parallel pairs compose; non-parallel are rejected") {
    InnCell1 a = inn.cells1[17];
    int tgt = target_mor1(x, a);
    InnCell1 b{x.G->mul(x.G->inv(x.t(2)), x.G->mul(tgt, x.G->inv(a.src))), 2,
               a.src};
    REQUIRE(parallel_mor1(x, a, b));
    auto p = make_mor2(x, a, b);
    CHECK(label_mor2(x, p) == x.H->mul(x.H->inv(b.F), a.F));
    InnCell1 c{a.f, a.F, x.G->mul(a.src, 1)};
    CHECK_THROWS_AS(make_mor2(x, a, c), validation_error);
  }
  SUBCASE("vertical label is the product L2 L1") {
    // frozen: from-identity cells with labels in H
    int e = x.G->identity();
    InnCell1 m1{x.t(2), x.H->inv(2), e};  // d2-style cell, label 2
    InnCell1 m0 = id_mor1(x, e);
    auto p = make_mor2(x, m0, m1);
    CHECK(label_mor2(x, p) == 2);
  }
}

TEST_CASE("strictness suite on the corpus") {
  for (auto x : {inn_crossed_module(symmetric_3()), incl_z2_z4()}) {
    CAPTURE(x.name);
    auto inn = build_inn(x);
    auto rep = check_strictness(inn);
    CAPTURE(rep.all_pass() ? "" : rep.first_failure()->name);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("pi0 is one and the groupoid is codiscrete") {
  for (auto x : {inn_crossed_module(symmetric_3()), incl_z2_z4(),
                 inn_crossed_module(trivial_group())}) {
    CAPTURE(x.name);
    auto inn = build_inn(x);
    CHECK(pi0(inn) == 1);
    auto rep = check_codiscrete(inn);
    CAPTURE(rep.all_pass() ? "" : rep.first_failure()->name);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("connecting 1-cells land on the identity object") {
  auto x = incl_z2_z4();
  for (int q = 0; q < 4; ++q) {
    auto r = connecting_mor1(x, q);
    CHECK(r.src == q);
    CHECK(target_mor1(x, r) == x.G->identity());
    CHECK(r.F == x.H->identity());
  }
}

TEST_CASE("exact sequence of 2-groupoids") {
  for (auto x : {inn_crossed_module(symmetric_3()), incl_z2_z4(),
                 inn_crossed_module(trivial_group())}) {
    CAPTURE(x.name);
    auto inn = build_inn(x);
    auto rep = check_exact_sequence(inn);
    CAPTURE(rep.all_pass() ? "" : rep.first_failure()->name);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("contractibility witness") {
  for (auto x : {inn_crossed_module(symmetric_3()), incl_z2_z4(),
                 inn_crossed_module(trivial_group())}) {
    CAPTURE(x.name);
    auto inn = build_inn(x);
    auto cw = contractibility_witness(inn);
    CAPTURE(cw.report.all_pass() ? "" : cw.report.first_failure()->name);
    CHECK(cw.report.all_pass());
    CHECK((int)cw.to_identity.size() == inn.n_obj);
  }
}

TEST_CASE("peiffer failure witness") {
  SUBCASE("s3 has a genuine failure reconciled by the forced 3-cell") {
    auto inn = build_inn(inn_crossed_module(symmetric_3()));
    auto pw = peiffer_failure_witness(inn);
    CHECK(pw.exists);
    CHECK(pw.report.all_pass());
    CHECK(pw.discrepancy != inn.x.H->identity());
  }
  SUBCASE("abelian instances satisfy the peiffer identity") {
    auto inn = build_inn(incl_z2_z4());
    auto pw = peiffer_failure_witness(inn);
    CHECK_FALSE(pw.exists);
    CHECK(pw.report.all_pass());
  }
}
