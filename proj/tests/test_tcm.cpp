#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cgt/tcm.hpp"

using namespace cgt;

namespace {

int label_index(const FiniteGroup& g, const std::string& lbl) {
  for (int i = 0; i < g.order(); ++i)
    if (g.label(i) == lbl) return i;
  REQUIRE(false);
  return -1;
}

TwoCrossedModule with_trivial_top(const CrossedModule& x) {
  // L = 1 over the crossed module x: the lifting is constantly trivial
  auto one = trivial_group();
  std::vector<int> pf((size_t)x.G->order() * x.G->order(), 0);
  (void)pf;
  TwoCrossedModule t{"L1(" + x.name + ")",
                     one,
                     x.H,
                     x.G,
                     make_hom(one, x.H, {x.H->identity()}),
                     x.t,
                     x.alpha,
                     trivial_action(x.G, one),
                     std::vector<int>((size_t)x.H->order() * x.H->order(), 0)};
  return t;
}

}  // namespace

TEST_CASE("a crossed module with trivial top level is a 2-crossed module") {
  for (auto x : {incl_z2_z4(), inn_crossed_module(symmetric_3())}) {
    CAPTURE(x.name);
    auto t = with_trivial_top(x);
    auto rep = validate_2crossed(t);
    CAPTURE(rep.all_pass() ? "" : rep.first_failure()->name);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("extraction from the corpus passes every axiom") {
  for (auto x : {inn_crossed_module(symmetric_3()), incl_z2_z4(),
                 inn_crossed_module(cyclic_group(4)),
                 inn_crossed_module(trivial_group())}) {
    CAPTURE(x.name);
    auto ext = extract_from_inn(x);
    auto rep = validate_2crossed(ext.tcm);
    CAPTURE(rep.all_pass() ? "" : rep.first_failure()->name);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("frozen peiffer value in the s3 extraction") {
  auto x = inn_crossed_module(symmetric_3());
  auto ext = extract_from_inn(x);
  int p12 = label_index(*x.G, "(12)");
  int p13 = label_index(*x.G, "(13)");
  int p123 = label_index(*x.H, "(123)");
  int p132 = label_index(*x.H, "(132)");
  int m = ext.gh.pair(p12, p123);
  // {((12),(123)), ((13),F)} = (132) for every F
  for (int F = 0; F < 6; ++F)
    CHECK(ext.tcm.pf(m, ext.gh.pair(p13, F)) == p132);
}

TEST_CASE("extraction boundary structure") {
  for (auto x : {inn_crossed_module(symmetric_3()), incl_z2_z4()}) {
    CAPTURE(x.name);
    auto ext = extract_from_inn(x);
    const auto& t = ext.tcm;
    // d2 injective, im d2 = ker d1, d1 surjective (trivial homology)
    std::set<int> im;
    for (int l = 0; l < t.L->order(); ++l) im.insert(t.d2(l));
    CHECK((int)im.size() == t.L->order());
    std::set<int> ker;
    for (int m = 0; m < t.M->order(); ++m)
      if (t.d1(m) == t.N->identity()) ker.insert(m);
    CHECK(im == ker);
    std::set<int> im1;
    for (int m = 0; m < t.M->order(); ++m) im1.insert(t.d1(m));
    CHECK((int)im1.size() == t.N->order());
    // the kernel consists of the pairs (t(F)^-1, F)
    for (int F = 0; F < t.L->order(); ++F)
      CHECK(ker.count(ext.gh.pair(x.G->inv(x.t(F)), F)));
  }
}

TEST_CASE("homology of the extraction is trivial") {
  for (auto x : {inn_crossed_module(symmetric_3()), incl_z2_z4()}) {
    auto ext = extract_from_inn(x);
    auto h = homology(ext.tcm);
    CHECK(h.pi0->order() == 1);
    CHECK(h.pi1->order() == 1);
    CHECK(h.pi2->order() == 1);
    CHECK(h.im_d1_was_normal);
  }
}

TEST_CASE("homology of a trivial-top instance") {
  auto t = with_trivial_top(incl_z2_z4());
  auto h = homology(t);
  CHECK(h.pi2->order() == 1);
  CHECK(h.pi1->order() == 1);      // ker(Z2 -> Z4) = 1
  CHECK(h.pi0->order() == 2);      // Z4 / im = Z2
  CHECK(h.im_d1_was_normal);
}

TEST_CASE("fully trivial instance") {
  auto t = with_trivial_top(inn_crossed_module(trivial_group()));
  CHECK(validate_2crossed(t).all_pass());
  auto h = homology(t);
  CHECK(h.pi0->order() == 1);
  CHECK(h.pi1->order() == 1);
  CHECK(h.pi2->order() == 1);
}

TEST_CASE("induced action is a valid action matching the sandwich") {
  for (auto x : {inn_crossed_module(symmetric_3()), incl_z2_z4()}) {
    CAPTURE(x.name);
    auto ext = extract_from_inn(x);
    auto act = induced_action(ext.tcm);  // validated by construction
    // against the monoidal conjugation sandwich in the 3-group
    for (int i = 0; i < ext.tcm.M->order(); ++i) {
      InnCell1 m{ext.gh.fpart(i), ext.gh.Fpart(i), x.G->identity()};
      for (int l = 0; l < ext.tcm.L->order(); ++l)
        CHECK(act(i, l) == mor1_action_on_mor2(x, m, l));
    }
    // (d2, induced action) is a crossed module
    auto xm = make_crossed_module("induced", ext.tcm.L, ext.tcm.M,
                                  ext.tcm.d2, act);
    CHECK(validate_crossed_module(xm).all_pass());
  }
}

TEST_CASE("mutating one peiffer entry is caught") {
  auto ext = extract_from_inn(incl_z2_z4());
  auto t = ext.tcm;
  REQUIRE(validate_2crossed(t).all_pass());
  // flip one entry to the other H-element
  t.peiffer[5] = t.L->mul(t.peiffer[5], 1);
  auto rep = validate_2crossed(t);
  CHECK_FALSE(rep.all_pass());
  CHECK(!rep.first_failure()->witness.empty());
}

TEST_CASE("mapping cone of the identity square") {
  SUBCASE("trivial instance") {
    auto cone = mapping_cone(identity_square(inn_crossed_module(trivial_group())));
    CHECK(validate_2crossed(cone.tcm).all_pass());
    CHECK(cone.tcm.M->order() == 1);
  }
  SUBCASE("abelian cone has constant-identity lifting") {
    auto cone = mapping_cone(identity_square(inn_crossed_module(cyclic_group(4))));
    CHECK(validate_2crossed(cone.tcm).all_pass());
    for (int v : cone.tcm.peiffer) CHECK(v == cone.tcm.L->identity());
  }
  SUBCASE("s3 cone lifting matches the closed formula") {
    auto x = inn_crossed_module(symmetric_3());
    auto cone = mapping_cone(identity_square(x));
    CHECK(validate_2crossed(cone.tcm).all_pass());
    const auto& sd = cone.gh;
    for (int i = 0; i < 36; ++i)
      for (int j = 0; j < 36; ++j) {
        int g1 = sd.fpart(i), h1 = sd.Fpart(i), g2 = sd.fpart(j);
        int expect = x.H->mul(h1, x.act(x.G->conj(g1, g2), x.H->inv(h1)));
        CHECK(cone.tcm.pf(i, j) == expect);
      }
  }
  SUBCASE("an invalid square is rejected") {
    auto s = identity_square(inn_crossed_module(symmetric_3()));
    for (auto& v : s.hmap) v = s.L->identity();
    CHECK_THROWS_AS(mapping_cone(s), validation_error);
  }
}

TEST_CASE("cone and extraction are isomorphic via the identity shape") {
  for (auto x : {inn_crossed_module(symmetric_3()), incl_z2_z4(),
                 inn_crossed_module(cyclic_group(4))}) {
    CAPTURE(x.name);
    auto ext = extract_from_inn(x);
    auto cone = mapping_cone(identity_square(x));
    auto iso = find_tcm_isomorphism(ext.tcm, cone.tcm);
    REQUIRE(iso.has_value());
    // the identity-shaped witness, verified axiom by axiom
    bool identity_shaped = true;
    for (size_t i = 0; i < iso->on_L.size(); ++i)
      identity_shaped = identity_shaped && iso->on_L[i] == (int)i;
    for (size_t i = 0; i < iso->on_M.size(); ++i)
      identity_shaped = identity_shaped && iso->on_M[i] == (int)i;
    for (size_t i = 0; i < iso->on_N.size(); ++i)
      identity_shaped = identity_shaped && iso->on_N[i] == (int)i;
    CHECK(identity_shaped);
    auto rep = verify_tcm_isomorphism(ext.tcm, cone.tcm, *iso);
    CAPTURE(rep.all_pass() ? "" : rep.first_failure()->name);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("isomorphism search results") {
  auto a = extract_from_inn(incl_z2_z4());
  SUBCASE("identity witness on equal inputs") {
    auto iso = find_tcm_isomorphism(a.tcm, a.tcm);
    REQUIRE(iso.has_value());
    CHECK(verify_tcm_isomorphism(a.tcm, a.tcm, *iso).all_pass());
  }
  SUBCASE("level order mismatch yields none") {
    auto b = extract_from_inn(inn_crossed_module(symmetric_3()));
    CHECK_FALSE(find_tcm_isomorphism(a.tcm, b.tcm).has_value());
  }
}
