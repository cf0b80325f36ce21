#include "cgt/xmod.hpp"

#include <set>

#include "cgt/parallel.hpp"

namespace cgt {

CrossedModule make_crossed_module(std::string name, GroupPtr H, GroupPtr G,
                                  GroupHom t, GroupAction alpha) {
  if (t.dom.get() != H.get() || t.cod.get() != G.get())
    throw validation_error("BoundaryMismatch", "t must map H to G");
  if (alpha.actor.get() != G.get() || alpha.target.get() != H.get())
    throw validation_error("ActionInvalid", "alpha must be G acting on H");
  return CrossedModule{std::move(name), std::move(H), std::move(G),
                       std::move(t), std::move(alpha)};
}

ValidationReport validate_crossed_module(const CrossedModule& x) {
  ValidationReport rep;
  rep.subject = x.name;
  const int nh = x.H->order(), ng = x.G->order();

  long long w = find_counterexample((long long)ng * nh, [&](long long i) {
    int g = (int)(i / nh), h = (int)(i % nh);
    return x.t(x.act(g, h)) != x.G->conj(g, x.t(h));
  });
  rep.add("equivariance", w < 0,
          w < 0 ? "" : tuple_witness({(int)(w / nh), (int)(w % nh)}));

  w = find_counterexample((long long)nh * nh, [&](long long i) {
    int h = (int)(i / nh), k = (int)(i % nh);
    return x.act(x.t(h), k) != x.H->conj(h, k);
  });
  rep.add("peiffer", w < 0,
          w < 0 ? "" : tuple_witness({(int)(w / nh), (int)(w % nh)}));
  return rep;
}

ValidationReport crossed_module_consequences(const CrossedModule& x) {
  ValidationReport rep;
  rep.subject = x.name;
  auto im = image_elements(x.t);
  rep.add("im_t_normal", is_normal_subgroup(*x.G, im));
  auto ker = kernel_elements(x.t);
  bool central = true;
  std::string wit;
  for (int k : ker) {
    for (int h = 0; h < x.H->order(); ++h)
      if (x.H->mul(k, h) != x.H->mul(h, k)) {
        central = false;
        wit = tuple_witness({k, h});
        break;
      }
    if (!central) break;
  }
  rep.add("ker_t_central", central, wit);
  return rep;
}

CrossedModule inn_crossed_module(GroupPtr g) {
  return make_crossed_module("inn(" + g->name() + ")", g, g, identity_hom(g),
                             conjugation_action(g));
}

CrossedModule aut_crossed_module(GroupPtr g) {
  auto aut = automorphism_group(g);
  // Ad : G -> Aut(G)
  std::vector<int> ad(g->order());
  for (int x = 0; x < g->order(); ++x) {
    std::vector<int> perm(g->order());
    for (int y = 0; y < g->order(); ++y) perm[y] = g->conj(x, y);
    int idx = -1;
    for (int i = 0; i < (int)aut.perms.size(); ++i)
      if (aut.perms[i] == perm) {
        idx = i;
        break;
      }
    if (idx < 0) throw validation_error("InternalError", "Ad not found in Aut");
    ad[x] = idx;
  }
  std::vector<std::vector<int>> tact(aut.grp->order(),
                                     std::vector<int>(g->order()));
  for (int a = 0; a < aut.grp->order(); ++a)
    for (int y = 0; y < g->order(); ++y) tact[a][y] = aut.perms[a][y];
  return make_crossed_module(
      "aut(" + g->name() + ")", g, aut.grp,
      make_hom(g, aut.grp, std::move(ad)),
      make_action(aut.grp, g, std::move(tact)));
}

CrossedModule incl_z2_z4() {
  auto z2 = cyclic_group(2);
  auto z4 = cyclic_group(4);
  return make_crossed_module("z2_in_z4", z2, z4, make_hom(z2, z4, {0, 2}),
                             trivial_action(z4, z2));
}

namespace {

// levelwise exactness: image of f equals kernel of g (as subsets)
bool image_equals_kernel(const GroupHom& f, const GroupHom& g,
                         std::string& witness) {
  auto im = image_elements(f);
  auto ker = kernel_elements(g);
  std::set<int> si(im.begin(), im.end()), sk(ker.begin(), ker.end());
  if (si == sk) return true;
  for (int x : si)
    if (!sk.count(x)) {
      witness = "image element " + std::to_string(x) + " not in kernel";
      return false;
    }
  for (int x : sk)
    if (!si.count(x)) {
      witness = "kernel element " + std::to_string(x) + " not in image";
      return false;
    }
  return true;
}

}  // namespace

OneGroupTower one_group_tower(GroupPtr g) {
  OneGroupTower tower;
  auto one = trivial_group();

  auto z = center(g);
  auto zstep = make_crossed_module("1->Z", one, z.grp,
                                   make_hom(one, z.grp, {z.grp->identity()}),
                                   trivial_action(z.grp, one));
  auto inn = inn_crossed_module(g);
  auto aut = aut_crossed_module(g);

  // Out(G) = Aut(G) / Inn(G) via coset enumeration
  auto inn_elems = image_elements(aut.t);
  auto out = quotient_group(aut.G, inn_elems, "Out(" + g->name() + ")");
  auto ostep = make_crossed_module(
      "1->Out", one, out.grp, make_hom(one, out.grp, {out.grp->identity()}),
      trivial_action(out.grp, one));

  tower.steps = {zstep, inn, aut, ostep};

  // maps between consecutive steps
  std::vector<int> z_incl(z.grp->order());
  for (int i = 0; i < z.grp->order(); ++i) z_incl[i] = z.elems[i];
  CrossedModuleHom m0{make_hom(one, g, {g->identity()}),
                      make_hom(z.grp, g, z_incl)};
  CrossedModuleHom m1{identity_hom(g), GroupHom{g, aut.G, aut.t.map}};
  std::vector<int> to_one(g->order(), 0);
  CrossedModuleHom m2{make_hom(g, one, to_one),
                      make_hom(aut.G, out.grp, out.proj)};
  tower.maps = {m0, m1, m2};

  ValidationReport& rep = tower.report;
  rep.subject = "tower(" + g->name() + ")";
  std::string wit;

  // H-level sequence: 1 -> G -id-> G -> 1
  rep.add("H_exact_at_inn",
          image_equals_kernel(tower.maps[0].on_H, tower.maps[1].on_H, wit), wit);
  wit.clear();
  rep.add("H_exact_at_aut",
          image_equals_kernel(tower.maps[1].on_H, tower.maps[2].on_H, wit), wit);
  wit.clear();

  // G-level sequence: Z(G) -> G -Ad-> Aut(G) -> Out(G)
  rep.add("G_injective_start",
          (int)std::set<int>(tower.maps[0].on_G.map.begin(),
                             tower.maps[0].on_G.map.end())
                  .size() == z.grp->order());
  rep.add("G_exact_at_inn",
          image_equals_kernel(tower.maps[0].on_G, tower.maps[1].on_G, wit), wit);
  wit.clear();
  rep.add("G_exact_at_aut",
          image_equals_kernel(tower.maps[1].on_G, tower.maps[2].on_G, wit), wit);
  wit.clear();
  rep.add("G_surjective_end",
          (int)std::set<int>(tower.maps[2].on_G.map.begin(),
                             tower.maps[2].on_G.map.end())
                  .size() == out.grp->order());

  for (size_t i = 0; i < tower.steps.size(); ++i) {
    auto r = validate_crossed_module(tower.steps[i]);
    rep.add("step" + std::to_string(i) + "_valid", r.all_pass(),
            r.all_pass() ? "" : r.first_failure()->name);
  }
  return tower;
}

CrossedSquare identity_square(const CrossedModule& x) {
  CrossedSquare s;
  s.name = "idsq(" + x.name + ")";
  s.L = x.H;
  s.M = x.H;
  s.N = x.G;
  s.P = x.G;
  s.f = identity_hom(x.H);
  s.u = x.t;
  s.v = x.t;
  s.g = identity_hom(x.G);
  s.actP_L = x.alpha;
  s.actP_M = x.alpha;
  s.actP_N = conjugation_action(x.G);
  const int nm = x.H->order(), nn = x.G->order();
  s.hmap.resize((size_t)nm * nn);
  for (int m = 0; m < nm; ++m)
    for (int n = 0; n < nn; ++n)
      s.hmap[(size_t)m * nn + n] = x.H->mul(m, x.act(n, x.H->inv(m)));
  return s;
}

ValidationReport validate_crossed_square(const CrossedSquare& s) {
  ValidationReport rep;
  rep.subject = s.name;
  const int nl = s.L->order(), nm = s.M->order(), nn = s.N->order(),
            np = s.P->order();
  const auto& L = *s.L;
  const auto& M = *s.M;
  const auto& N = *s.N;
  const auto& P = *s.P;

  bool commutes = true;
  std::string wit;
  for (int l = 0; l < nl; ++l)
    if (s.v(s.f(l)) != s.g(s.u(l))) {
      commutes = false;
      wit = tuple_witness({l});
      break;
    }
  rep.add("square_commutes", commutes, wit);

  // axiom 1: f, u equivariant; N->P, M->P, L->P crossed modules
  long long w = find_counterexample((long long)np * nl, [&](long long i) {
    int p = (int)(i / nl), l = (int)(i % nl);
    return s.f(s.actP_L(p, l)) != s.actP_M(p, s.f(l)) ||
           s.u(s.actP_L(p, l)) != s.actP_N(p, s.u(l));
  });
  rep.add("1_f_u_equivariant", w < 0,
          w < 0 ? "" : tuple_witness({(int)(w / nl), (int)(w % nl)}));

  auto xm_ok = [&](const GroupHom& t, const GroupAction& a,
                   const FiniteGroup& dom) {
    const int nd = dom.order();
    long long ww = find_counterexample((long long)np * nd, [&](long long i) {
      int p = (int)(i / nd), d = (int)(i % nd);
      return t(a(p, d)) != P.conj(p, t(d));
    });
    if (ww >= 0) return std::make_pair(false, std::string("equivariance"));
    ww = find_counterexample((long long)nd * nd, [&](long long i) {
      int d = (int)(i / nd), d2 = (int)(i % nd);
      return a(t(d), d2) != dom.conj(d, d2);
    });
    if (ww >= 0) return std::make_pair(false, std::string("peiffer"));
    return std::make_pair(true, std::string());
  };
  auto [okN, witN] = xm_ok(s.g, s.actP_N, N);
  rep.add("1_N_to_P_crossed", okN, witN);
  auto [okM, witM] = xm_ok(s.v, s.actP_M, M);
  rep.add("1_M_to_P_crossed", okM, witM);
  GroupHom vf = compose_hom(s.f, s.v);
  auto [okL, witL] = xm_ok(vf, s.actP_L, L);
  rep.add("1_L_to_P_crossed", okL, witL);

  // axiom 2: f(h(x,y)) = x ^{g(y)}x^-1 ; u(h(x,y)) = ^{v(x)}y y^-1
  w = find_counterexample((long long)nm * nn, [&](long long i) {
    int x = (int)(i / nn), y = (int)(i % nn);
    return s.f(s.h(x, y)) != M.mul(x, s.actP_M(s.g(y), M.inv(x)));
  });
  rep.add("2_f_of_h", w < 0,
          w < 0 ? "" : tuple_witness({(int)(w / nn), (int)(w % nn)}));
  w = find_counterexample((long long)nm * nn, [&](long long i) {
    int x = (int)(i / nn), y = (int)(i % nn);
    return s.u(s.h(x, y)) != N.mul(s.actP_N(s.v(x), y), N.inv(y));
  });
  rep.add("2_u_of_h", w < 0,
          w < 0 ? "" : tuple_witness({(int)(w / nn), (int)(w % nn)}));

  // axiom 3: h(f(z),y) = z ^{g(y)}z^-1 ; h(x,u(z)) = ^{v(x)}z z^-1
  w = find_counterexample((long long)nl * nn, [&](long long i) {
    int z = (int)(i / nn), y = (int)(i % nn);
    return s.h(s.f(z), y) != L.mul(z, s.actP_L(s.g(y), L.inv(z)));
  });
  rep.add("3_h_f", w < 0,
          w < 0 ? "" : tuple_witness({(int)(w / nn), (int)(w % nn)}));
  w = find_counterexample((long long)nm * nl, [&](long long i) {
    int x = (int)(i / nl), z = (int)(i % nl);
    return s.h(x, s.u(z)) != L.mul(s.actP_L(s.v(x), z), L.inv(z));
  });
  rep.add("3_h_u", w < 0,
          w < 0 ? "" : tuple_witness({(int)(w / nl), (int)(w % nl)}));

  // axiom 4: h(xx',y) = ^{v(x)}h(x',y) h(x,y) ; h(x,yy') = h(x,y) ^{g(y)}h(x,y')
  w = find_counterexample((long long)nm * nm * nn, [&](long long i) {
    int x = (int)(i / ((long long)nm * nn));
    int xp = (int)(i / nn % nm), y = (int)(i % nn);
    return s.h(M.mul(x, xp), y) !=
           L.mul(s.actP_L(s.v(x), s.h(xp, y)), s.h(x, y));
  });
  rep.add("4_h_mult_left", w < 0,
          w < 0 ? ""
                : tuple_witness({(int)(w / ((long long)nm * nn)),
                                 (int)(w / nn % nm), (int)(w % nn)}));
  w = find_counterexample((long long)nm * nn * nn, [&](long long i) {
    int x = (int)(i / ((long long)nn * nn));
    int y = (int)(i / nn % nn), yp = (int)(i % nn);
    return s.h(x, N.mul(y, yp)) !=
           L.mul(s.h(x, y), s.actP_L(s.g(y), s.h(x, yp)));
  });
  rep.add("4_h_mult_right", w < 0,
          w < 0 ? ""
                : tuple_witness({(int)(w / ((long long)nn * nn)),
                                 (int)(w / nn % nn), (int)(w % nn)}));

  // axiom 5: ^p h(x,y) = h(^p x, ^p y)
  w = find_counterexample((long long)np * nm * nn, [&](long long i) {
    int p = (int)(i / ((long long)nm * nn));
    int x = (int)(i / nn % nm), y = (int)(i % nn);
    return s.actP_L(p, s.h(x, y)) != s.h(s.actP_M(p, x), s.actP_N(p, y));
  });
  rep.add("5_h_equivariant", w < 0,
          w < 0 ? ""
                : tuple_witness({(int)(w / ((long long)nm * nn)),
                                 (int)(w / nn % nm), (int)(w % nn)}));
  return rep;
}

}  // namespace cgt
