#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cgt/group.hpp"

using namespace cgt;

namespace {

// independent permutation model used as the oracle throughout
using Perm = std::vector<int>;

Perm pcompose(const Perm& a, const Perm& b) {  // right-to-left
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int label_index(const FiniteGroup& g, const std::string& lbl) {
  for (int i = 0; i < g.order(); ++i)
    if (g.label(i) == lbl) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("z2 from its table") {
  auto g = make_group({{0, 1}, {1, 0}});
  CHECK(g->order() == 2);
  CHECK(g->identity() == 0);
  CHECK(g->inv(1) == 1);
}

TEST_CASE("non-associative table is rejected with a witness") {
  std::vector<std::vector<int>> t = {{0, 1, 2}, {1, 2, 2}, {2, 2, 1}};
  try {
    make_group(t);
    CHECK(false);
  } catch (const validation_error& e) {
    CHECK(e.kind() == "NotAssociative");
    CHECK(!e.witness().empty());
  }
}

TEST_CASE("missing identity is reported") {
  std::vector<std::vector<int>> absorb = {{0, 0}, {0, 0}};
  try {
    make_group(absorb);
    CHECK(false);
  } catch (const validation_error& e) {
    CHECK((e.kind() == "NoIdentity" || e.kind() == "NoInverse"));
  }
}

TEST_CASE("s3 equals the permutation model") {
  auto s3 = symmetric_3();
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());

  // oracle: the six permutations of {0,1,2} composed right-to-left
  auto perms = all_perms(3);
  std::map<Perm, int> idx;
  for (int i = 0; i < 6; ++i) idx[perms[i]] = i;
  std::vector<std::vector<int>> model(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) model[a][b] = idx[pcompose(perms[a], perms[b])];
  auto model_g = make_group(model);
  CHECK(find_isomorphism(*s3, *model_g).has_value());

  // frozen composition: (12) then (13) gives (13)(12) = (123)
  int p12 = label_index(*s3, "(12)");
  int p13 = label_index(*s3, "(13)");
  int p123 = label_index(*s3, "(123)");
  CHECK(s3->mul(p13, p12) == p123);
}

TEST_CASE("automorphism groups by brute-force oracle") {
  SUBCASE("z2 has trivial automorphisms") {
    auto aut = automorphism_group(cyclic_group(2));
    CHECK(aut.grp->order() == 1);
  }
  SUBCASE("z4: oracle is a filter over all bijections") {
    auto z4 = cyclic_group(4);
    auto perms = all_perms(4);
    int count = 0;
    for (const auto& p : perms) {
      bool hom = true;
      for (int a = 0; a < 4 && hom; ++a)
        for (int b = 0; b < 4 && hom; ++b)
          hom = p[z4->mul(a, b)] == z4->mul(p[a], p[b]);
      if (hom) ++count;
    }
    CHECK(count == 2);
    auto aut = automorphism_group(z4);
    CHECK(aut.grp->order() == count);
  }
  SUBCASE("s3: all six automorphisms are found and form s3") {
    auto s3 = symmetric_3();
    auto perms = all_perms(6);
    std::set<Perm> oracle;
    for (const auto& p : perms) {
      if (p[s3->identity()] != s3->identity()) continue;
      bool hom = true;
      for (int a = 0; a < 6 && hom; ++a)
        for (int b = 0; b < 6 && hom; ++b)
          hom = p[s3->mul(a, b)] == s3->mul(p[a], p[b]);
      if (hom) oracle.insert(p);
    }
    CHECK(oracle.size() == 6);
    auto aut = automorphism_group(s3);
    CHECK(aut.grp->order() == 6);
    std::set<Perm> got(aut.perms.begin(), aut.perms.end());
    CHECK(got == oracle);
    CHECK(find_isomorphism(*aut.grp, *s3).has_value());
  }
}

TEST_CASE("automorphism group is closed under composition and inverse") {
  for (auto g : {symmetric_3(), cyclic_group(4), dihedral_4()}) {
    auto aut = automorphism_group(g);
    std::set<Perm> elems(aut.perms.begin(), aut.perms.end());
    for (const auto& a : aut.perms) {
      for (const auto& b : aut.perms) CHECK(elems.count(pcompose(a, b)));
      Perm inv(a.size());
      for (size_t i = 0; i < a.size(); ++i) inv[a[i]] = (int)i;
      CHECK(elems.count(inv));
    }
    for (int i = 0; i < aut.grp->order(); ++i)
      for (int j = 0; j < aut.grp->order(); ++j) {
        auto c = pcompose(aut.perms[i], aut.perms[j]);
        CHECK(aut.perms[aut.grp->mul(i, j)] == c);
      }
  }
}

TEST_CASE("semidirect products") {
  SUBCASE("trivial action gives the direct product, entry by entry") {
    auto z2 = cyclic_group(2);
    auto sd = semidirect_product(z2, z2, trivial_action(z2, z2));
    CHECK(sd.grp->order() == 4);
    CHECK(sd.grp->is_abelian());
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        int f = z2->mul(sd.fpart(a), sd.fpart(b));
        int F = z2->mul(sd.Fpart(a), sd.Fpart(b));
        CHECK(sd.grp->mul(a, b) == sd.pair(f, F));
      }
  }
  SUBCASE("z2 acting on z3 by inversion gives s3") {
    auto z2 = cyclic_group(2);
    auto z3 = cyclic_group(3);
    auto act = make_action(z2, z3, {{0, 1, 2}, {0, 2, 1}});
    auto sd = semidirect_product(z2, z3, act);
    CHECK(sd.grp->order() == 6);
    CHECK_FALSE(sd.grp->is_abelian());
    CHECK(find_isomorphism(*sd.grp, *symmetric_3()).has_value());
  }
  SUBCASE("frozen product in the conjugation semidirect of s3") {
    auto s3 = symmetric_3();
    auto sd = semidirect_product(s3, s3, conjugation_action(s3));
    int p12 = label_index(*s3, "(12)"), p13 = label_index(*s3, "(13)");
    int p123 = label_index(*s3, "(123)");
    // ((13),(12)) * ((12),(123)) = ((123),(13)): oracle is hand evaluation
    // of F2 ^{f2}F1 in the permutation model
    int lhs = sd.grp->mul(sd.pair(p13, p12), sd.pair(p12, p123));
    CHECK(lhs == sd.pair(p123, p13));
    // cross-check: d1(f,F) = t(F) f is a homomorphism out of the product
    auto d1 = [&](int i) { return s3->mul(sd.Fpart(i), sd.fpart(i)); };
    for (int a = 0; a < 36; ++a)
      for (int b = 0; b < 36; ++b)
        CHECK(d1(sd.grp->mul(a, b)) == s3->mul(d1(a), d1(b)));
  }
}

TEST_CASE("centers") {
  CHECK(center(cyclic_group(4)).grp->order() == 4);
  SUBCASE("s3 center is trivial by brute force") {
    auto s3 = symmetric_3();
    int central = 0;
    for (int x = 0; x < 6; ++x) {
      bool c = true;
      for (int y = 0; y < 6; ++y) c = c && s3->mul(x, y) == s3->mul(y, x);
      central += c;
    }
    CHECK(central == 1);
    CHECK(center(s3).grp->order() == central);
  }
  SUBCASE("d4 center has order 2") {
    auto d4 = dihedral_4();
    CHECK(d4->order() == 8);
    CHECK(center(d4).grp->order() == 2);
  }
  SUBCASE("center order divides group order") {
    for (auto g :
         {cyclic_group(2), cyclic_group(4), symmetric_3(), dihedral_4()})
      CHECK(g->order() % center(g).grp->order() == 0);
  }
}

TEST_CASE("homomorphism and action validation") {
  auto s3 = symmetric_3();
  auto z4 = cyclic_group(4);
  auto z2 = cyclic_group(2);
  auto z3 = cyclic_group(3);

  CHECK_NOTHROW(identity_hom(s3));
  CHECK_NOTHROW(make_hom(z4, z2, {0, 1, 0, 1}));
  try {
    make_hom(z2, z3, {0, 1});
    CHECK(false);
  } catch (const validation_error& e) {
    CHECK(e.kind() == "NotHomomorphism");
  }
  CHECK_THROWS_AS(make_action(z2, z2, {{0, 1}, {1, 1}}), validation_error);
  CHECK_NOTHROW(conjugation_action(s3));
}

TEST_CASE("quotients and normal closures") {
  auto s3 = symmetric_3();
  int p123 = label_index(*s3, "(123)");
  auto a3 = generated_subgroup(*s3, {p123});
  CHECK(a3.size() == 3);
  CHECK(is_normal_subgroup(*s3, a3));
  auto q = quotient_group(s3, a3);
  CHECK(q.grp->order() == 2);

  int p12 = label_index(*s3, "(12)");
  CHECK_FALSE(is_normal_subgroup(*s3, generated_subgroup(*s3, {p12})));
  CHECK(normal_closure(*s3, {p12}).size() == 6);
}

TEST_CASE("isomorphism search") {
  auto z4 = cyclic_group(4);
  auto z2 = cyclic_group(2);
  auto sdz2z2 = semidirect_product(z2, z2, trivial_action(z2, z2));
  CHECK_FALSE(find_isomorphism(*z4, *sdz2z2.grp).has_value());
  CHECK(find_isomorphism(*z4, *cyclic_group(4)).has_value());
  auto s3 = symmetric_3();
  auto iso = find_isomorphism(*s3, *s3);
  REQUIRE(iso.has_value());
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK((*iso)[s3->mul(a, b)] == s3->mul((*iso)[a], (*iso)[b]));
}
