#include "cgt/tcm.hpp"

#include <set>

#include "cgt/parallel.hpp"

namespace cgt {

namespace {

struct MOps {
  const FiniteGroup& M;
  int mul(int a, int b) const { return M.mul(a, b); }
  int inv(int a) const { return M.inv(a); }
  int conj(int a, int b) const { return M.conj(a, b); }
};

}  // namespace

GroupAction induced_action(const TwoCrossedModule& t) {
  const auto& L = *t.L;
  const auto& M = *t.M;
  std::vector<std::vector<int>> table(M.order(), std::vector<int>(L.order()));
  for (int m = 0; m < M.order(); ++m)
    for (int l = 0; l < L.order(); ++l)
      table[m][l] = L.mul(l, t.pfx(t.d2(L.inv(l)), m));
  return make_action(t.M, t.L, std::move(table));
}

ValidationReport validate_2crossed(const TwoCrossedModule& t) {
  ValidationReport rep;
  rep.subject = t.name;
  const auto& L = *t.L;
  const auto& M = *t.M;
  const auto& N = *t.N;
  const int nl = L.order(), nm = M.order(), nn = N.order();

  // complex and normality
  long long w = find_counterexample(nl, [&](long long i) {
    return t.d1(t.d2((int)i)) != N.identity();
  });
  rep.add("complex_d1d2_trivial", w < 0, w < 0 ? "" : tuple_witness({(int)w}));

  auto ker1 = kernel_elements(t.d1);
  auto im2 = image_elements(t.d2);
  {
    std::set<int> sk(ker1.begin(), ker1.end());
    bool contained = true, normal = true;
    for (int x : im2) contained = contained && sk.count(x);
    std::set<int> si(im2.begin(), im2.end());
    for (int x : im2)
      for (int k : ker1)
        if (!si.count(M.conj(k, x))) normal = false;
    rep.add("normal_complex", contained && normal);
  }

  // N-equivariance of the structure maps
  w = find_counterexample((long long)nn * nl, [&](long long i) {
    int n = (int)(i / nl), l = (int)(i % nl);
    return t.d2(t.actN_L(n, l)) != t.actN_M(n, t.d2(l));
  });
  rep.add("d2_equivariant", w < 0);
  w = find_counterexample((long long)nn * nm, [&](long long i) {
    int n = (int)(i / nm), m = (int)(i % nm);
    return t.d1(t.actN_M(n, m)) != N.conj(n, t.d1(m));
  });
  rep.add("d1_equivariant", w < 0);

  // the induced M-action on L, in the axiom orientation
  std::vector<int> mact((size_t)nm * nl);
  for (int m = 0; m < nm; ++m)
    for (int l = 0; l < nl; ++l)
      mact[(size_t)m * nl + l] = L.mul(l, t.pfx(t.d2(L.inv(l)), m));
  auto aM = [&](int m, int l) { return mact[(size_t)m * nl + l]; };

  // axiom 1: d2{m,m'} = (m m' m^-1) (^{d1 m}m')^-1
  w = find_counterexample((long long)nm * nm, [&](long long i) {
    int m = (int)(i / nm), mp = (int)(i % nm);
    int lhs = t.d2(t.pfx(m, mp));
    int rhs = M.mul(M.conj(m, mp), M.inv(t.actN_M(t.d1(m), mp)));
    return lhs != rhs;
  });
  rep.add("axiom1_d2_of_lifting", w < 0,
          w < 0 ? "" : tuple_witness({(int)(w / nm), (int)(w % nm)}));

  // axiom 2: {d2 l, d2 l'} = [l, l']
  w = find_counterexample((long long)nl * nl, [&](long long i) {
    int l = (int)(i / nl), lp = (int)(i % nl);
    return t.pfx(t.d2(l), t.d2(lp)) != L.commutator(l, lp);
  });
  rep.add("axiom2_commutator", w < 0,
          w < 0 ? "" : tuple_witness({(int)(w / nl), (int)(w % nl)}));

  // axiom 3a: {m, m'm''} = {m,m'} ^{m m' m^-1}{m,m''}
  w = find_counterexample((long long)nm * nm * nm, [&](long long i) {
    int m = (int)(i / ((long long)nm * nm));
    int mp = (int)(i / nm % nm), mpp = (int)(i % nm);
    int lhs = t.pfx(m, M.mul(mp, mpp));
    int rhs = L.mul(t.pfx(m, mp), aM(M.conj(m, mp), t.pfx(m, mpp)));
    return lhs != rhs;
  });
  rep.add("axiom3a_pairing_right", w < 0,
          w < 0 ? ""
                : tuple_witness({(int)(w / ((long long)nm * nm)),
                                 (int)(w / nm % nm), (int)(w % nm)}));

  // axiom 3b: {mm', m''} = {m, m'm''m'^-1} ^{d1 m}{m',m''}
  w = find_counterexample((long long)nm * nm * nm, [&](long long i) {
    int m = (int)(i / ((long long)nm * nm));
    int mp = (int)(i / nm % nm), mpp = (int)(i % nm);
    int lhs = t.pfx(M.mul(m, mp), mpp);
    int rhs = L.mul(t.pfx(m, M.conj(mp, mpp)),
                    t.actN_L(t.d1(m), t.pfx(mp, mpp)));
    return lhs != rhs;
  });
  rep.add("axiom3b_pairing_left", w < 0,
          w < 0 ? ""
                : tuple_witness({(int)(w / ((long long)nm * nm)),
                                 (int)(w / nm % nm), (int)(w % nm)}));

  // axiom 4: {m, d2 l} = (^m l)(^{d1 m}l)^-1
  w = find_counterexample((long long)nm * nl, [&](long long i) {
    int m = (int)(i / nl), l = (int)(i % nl);
    return t.pfx(m, t.d2(l)) !=
           L.mul(aM(m, l), L.inv(t.actN_L(t.d1(m), l)));
  });
  rep.add("axiom4_lifted_action", w < 0,
          w < 0 ? "" : tuple_witness({(int)(w / nl), (int)(w % nl)}));

  // axiom 5: ^n{m,m'} = {^n m, ^n m'}
  w = find_counterexample((long long)nn * nm * nm, [&](long long i) {
    int n = (int)(i / ((long long)nm * nm));
    int m = (int)(i / nm % nm), mp = (int)(i % nm);
    return t.actN_L(n, t.pfx(m, mp)) !=
           t.pfx(t.actN_M(n, m), t.actN_M(n, mp));
  });
  rep.add("axiom5_equivariance", w < 0,
          w < 0 ? ""
                : tuple_witness({(int)(w / ((long long)nm * nm)),
                                 (int)(w / nm % nm), (int)(w % nm)}));

  // d2 with the induced action is a crossed module
  {
    bool is_action = true;
    for (int l = 0; l < nl && is_action; ++l)
      is_action = aM(M.identity(), l) == l;
    for (int m = 0; m < nm && is_action; ++m)
      for (int mp = 0; mp < nm && is_action; ++mp)
        for (int l = 0; l < nl && is_action; ++l)
          is_action = aM(M.mul(m, mp), l) == aM(m, aM(mp, l));
    rep.add("induced_is_action", is_action);
  }
  w = find_counterexample((long long)nm * nl, [&](long long i) {
    int m = (int)(i / nl), l = (int)(i % nl);
    return t.d2(aM(m, l)) != M.conj(m, t.d2(l));
  });
  rep.add("induced_d2_equivariant", w < 0);
  w = find_counterexample((long long)nl * nl, [&](long long i) {
    int l = (int)(i / nl), lp = (int)(i % nl);
    return aM(t.d2(l), lp) != L.conj(l, lp);
  });
  rep.add("induced_d2_peiffer", w < 0);

  // axiom-1 consequence, written out as a single word equation
  w = find_counterexample((long long)nm * nm, [&](long long i) {
    int m = (int)(i / nm), mp = (int)(i % nm);
    int p = M.mul(
        M.mul(M.mul(t.d2(t.pfx(m, mp)), t.actN_M(t.d1(m), mp)), M.mul(m, M.inv(mp))),
        M.inv(m));
    return p != M.identity();
  });
  rep.add("axiom1_word_consequence", w < 0);

  return rep;
}

ExtractedTcm extract_from_inn(const CrossedModule& x) {
  ExtractedTcm out;
  const auto& G = *x.G;
  const auto& H = *x.H;
  auto sd = semidirect_product(x.G, x.H, x.alpha,
                               x.G->name() + "|x" + x.H->name());
  const int nm = sd.grp->order(), nl = H.order(), nn = G.order();

  std::vector<int> d1map(nm), d2map(nl);
  for (int i = 0; i < nm; ++i)
    d1map[i] = G.mul(x.t(sd.Fpart(i)), sd.fpart(i));
  for (int l = 0; l < nl; ++l) d2map[l] = sd.pair(x.t(l), H.inv(l));

  std::vector<std::vector<int>> anm(nn, std::vector<int>(nm));
  for (int g = 0; g < nn; ++g)
    for (int i = 0; i < nm; ++i)
      anm[g][i] = sd.pair(G.conj(g, sd.fpart(i)), x.act(g, sd.Fpart(i)));
  std::vector<std::vector<int>> anl(nn, std::vector<int>(nl));
  for (int g = 0; g < nn; ++g)
    for (int l = 0; l < nl; ++l) anl[g][l] = x.act(g, l);

  std::vector<int> pf((size_t)nm * nm);
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) {
      int h = sd.fpart(i), Hl = sd.Fpart(i), f = sd.fpart(j);
      pf[(size_t)i * nm + j] = H.mul(Hl, x.act(G.conj(h, f), H.inv(Hl)));
    }

  out.tcm = TwoCrossedModule{
      "tcm(" + x.name + ")",
      x.H,
      sd.grp,
      x.G,
      make_hom(x.H, sd.grp, std::move(d2map)),
      make_hom(sd.grp, x.G, std::move(d1map)),
      make_action(x.G, sd.grp, std::move(anm)),
      make_action(x.G, x.H, std::move(anl)),
      std::move(pf)};
  out.gh = sd;
  return out;
}

ExtractedTcm mapping_cone(const CrossedSquare& s) {
  auto pre = validate_crossed_square(s);
  if (!pre.all_pass())
    throw validation_error("SquareInvalid", pre.first_failure()->name);

  const auto& L = *s.L;
  const auto& M = *s.M;
  const auto& N = *s.N;
  const auto& P = *s.P;

  // N acts on M through g : N -> P
  std::vector<std::vector<int>> nact(N.order(), std::vector<int>(M.order()));
  for (int n = 0; n < N.order(); ++n)
    for (int m = 0; m < M.order(); ++m) nact[n][m] = s.actP_M(s.g(n), m);
  auto sd = semidirect_product(s.N, s.M, make_action(s.N, s.M, nact),
                               s.N->name() + "|x" + s.M->name());
  const int nm = sd.grp->order();

  std::vector<int> d1map(nm), d2map(L.order());
  for (int i = 0; i < nm; ++i)
    d1map[i] = P.mul(s.v(sd.Fpart(i)), s.g(sd.fpart(i)));
  for (int l = 0; l < L.order(); ++l)
    d2map[l] = sd.pair(s.u(l), M.inv(s.f(l)));

  std::vector<std::vector<int>> apm(P.order(), std::vector<int>(nm));
  for (int p = 0; p < P.order(); ++p)
    for (int i = 0; i < nm; ++i)
      apm[p][i] = sd.pair(s.actP_N(p, sd.fpart(i)), s.actP_M(p, sd.Fpart(i)));
  std::vector<std::vector<int>> apl(P.order(), std::vector<int>(L.order()));
  for (int p = 0; p < P.order(); ++p)
    for (int l = 0; l < L.order(); ++l) apl[p][l] = s.actP_L(p, l);

  std::vector<int> pf((size_t)nm * nm);
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) {
      int n1 = sd.fpart(i), m1 = sd.Fpart(i), n2 = sd.fpart(j);
      pf[(size_t)i * nm + j] = s.h(m1, N.conj(n1, n2));
    }

  ExtractedTcm out;
  out.tcm = TwoCrossedModule{"cone(" + s.name + ")",
                             s.L,
                             sd.grp,
                             s.P,
                             make_hom(s.L, sd.grp, std::move(d2map)),
                             make_hom(sd.grp, s.P, std::move(d1map)),
                             make_action(s.P, sd.grp, std::move(apm)),
                             make_action(s.P, s.L, std::move(apl)),
                             std::move(pf)};
  out.gh = sd;
  return out;
}

Homology homology(const TwoCrossedModule& t) {
  Homology h;
  const auto& M = *t.M;

  auto ker2 = kernel_elements(t.d2);
  h.pi2 = subgroup_from_elements(t.L, ker2, "pi2").grp;

  auto ker1 = kernel_elements(t.d1);
  auto sub = subgroup_from_elements(t.M, ker1, "ker_d1");
  std::vector<int> im2_in_sub;
  for (int l = 0; l < t.L->order(); ++l) {
    int m = t.d2(l);
    im2_in_sub.push_back(sub.parent_to_sub[m]);
  }
  h.pi1 = quotient_group(sub.grp, im2_in_sub, "pi1").grp;

  auto im1 = image_elements(t.d1);
  h.im_d1_was_normal = is_normal_subgroup(*t.N, im1);
  auto closure = normal_closure(*t.N, im1);
  h.pi0 = quotient_group(t.N, closure, "pi0").grp;
  (void)M;
  return h;
}

namespace {

bool hom_images_ok(const TwoCrossedModule& a, const TwoCrossedModule& b,
                   const TcmIso& iso) {
  const int nl = a.L->order(), nm = a.M->order(), nn = a.N->order();
  for (int l = 0; l < nl; ++l)
    if (iso.on_M[a.d2(l)] != b.d2.map[iso.on_L[l]]) return false;
  for (int m = 0; m < nm; ++m)
    if (iso.on_N[a.d1(m)] != b.d1.map[iso.on_M[m]]) return false;
  for (int n = 0; n < nn; ++n) {
    for (int m = 0; m < nm; ++m)
      if (iso.on_M[a.actN_M(n, m)] != b.actN_M(iso.on_N[n], iso.on_M[m]))
        return false;
    for (int l = 0; l < nl; ++l)
      if (iso.on_L[a.actN_L(n, l)] != b.actN_L(iso.on_N[n], iso.on_L[l]))
        return false;
  }
  for (int m = 0; m < nm; ++m)
    for (int mp = 0; mp < nm; ++mp)
      if (iso.on_L[a.pf(m, mp)] != b.pf(iso.on_M[m], iso.on_M[mp]))
        return false;
  return true;
}

bool is_group_iso(const FiniteGroup& a, const FiniteGroup& b,
                  const std::vector<int>& map) {
  std::vector<bool> hit(b.order(), false);
  for (int x = 0; x < a.order(); ++x) {
    if (hit[map[x]]) return false;
    hit[map[x]] = true;
  }
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
  return true;
}

}  // namespace

ValidationReport verify_tcm_isomorphism(const TwoCrossedModule& a,
                                        const TwoCrossedModule& b,
                                        const TcmIso& iso) {
  ValidationReport rep;
  rep.subject = a.name + "~" + b.name;
  rep.add("L_iso", is_group_iso(*a.L, *b.L, iso.on_L));
  rep.add("M_iso", is_group_iso(*a.M, *b.M, iso.on_M));
  rep.add("N_iso", is_group_iso(*a.N, *b.N, iso.on_N));

  const int nl = a.L->order(), nm = a.M->order(), nn = a.N->order();
  long long w = find_counterexample(nl, [&](long long l) {
    return iso.on_M[a.d2((int)l)] != b.d2.map[iso.on_L[(size_t)l]];
  });
  rep.add("d2_square", w < 0);
  w = find_counterexample(nm, [&](long long m) {
    return iso.on_N[a.d1((int)m)] != b.d1.map[iso.on_M[(size_t)m]];
  });
  rep.add("d1_square", w < 0);
  w = find_counterexample((long long)nn * nm, [&](long long i) {
    int n = (int)(i / nm), m = (int)(i % nm);
    return iso.on_M[a.actN_M(n, m)] != b.actN_M(iso.on_N[n], iso.on_M[m]);
  });
  rep.add("actN_M_equivariant", w < 0);
  w = find_counterexample((long long)nn * nl, [&](long long i) {
    int n = (int)(i / nl), l = (int)(i % nl);
    return iso.on_L[a.actN_L(n, l)] != b.actN_L(iso.on_N[n], iso.on_L[l]);
  });
  rep.add("actN_L_equivariant", w < 0);
  w = find_counterexample((long long)nm * nm, [&](long long i) {
    int m = (int)(i / nm), mp = (int)(i % nm);
    return iso.on_L[a.pf(m, mp)] != b.pf(iso.on_M[m], iso.on_M[mp]);
  });
  rep.add("peiffer_table_equal", w < 0,
          w < 0 ? "" : tuple_witness({(int)(w / nm), (int)(w % nm)}));
  return rep;
}

std::optional<TcmIso> find_tcm_isomorphism(const TwoCrossedModule& a,
                                           const TwoCrossedModule& b) {
  if (a.L->order() != b.L->order() || a.M->order() != b.M->order() ||
      a.N->order() != b.N->order())
    return std::nullopt;

  // identity-shaped fast path
  auto ident = [](int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
  };
  TcmIso id{ident(a.L->order()), ident(a.M->order()), ident(a.N->order())};
  if (is_group_iso(*a.L, *b.L, id.on_L) && is_group_iso(*a.M, *b.M, id.on_M) &&
      is_group_iso(*a.N, *b.N, id.on_N) && hom_images_ok(a, b, id))
    return id;

  // search: enumerate N-isos and M-isos from generator images, L forced last
  auto gens_N = minimal_generating_sequence(*a.N);
  auto gens_M = minimal_generating_sequence(*a.M);
  auto gens_L = minimal_generating_sequence(*a.L);

  std::vector<std::vector<int>> isoN, isoM, isoL;
  auto collect = [&](const FiniteGroup& ga, const FiniteGroup& gb,
                     const std::vector<int>& gens,
                     std::vector<std::vector<int>>& out) {
    std::vector<int> images(gens.size());
    std::vector<std::vector<int>> cands(gens.size());
    for (size_t k = 0; k < gens.size(); ++k)
      for (int y = 0; y < gb.order(); ++y)
        if (gb.element_order(y) == ga.element_order(gens[k]))
          cands[k].push_back(y);
    std::vector<size_t> pos(gens.size(), 0);
    if (gens.empty()) {
      out.push_back({gb.identity()});
      return;
    }
    while (true) {
      for (size_t k = 0; k < gens.size(); ++k) images[k] = cands[k][pos[k]];
      // close the partial map
      std::vector<int> map(ga.order(), -1);
      map[ga.identity()] = gb.identity();
      std::vector<int> word{ga.identity()};
      bool ok = true;
      for (size_t head = 0; head < word.size() && ok; ++head)
        for (size_t gi = 0; gi < gens.size() && ok; ++gi) {
          int y = ga.mul(gens[gi], word[head]);
          int fy = gb.mul(images[gi], map[word[head]]);
          if (map[y] < 0) {
            map[y] = fy;
            word.push_back(y);
          } else if (map[y] != fy) {
            ok = false;
          }
        }
      if (ok) {
        for (int v : map) ok = ok && v >= 0;
        if (ok && is_group_iso(ga, gb, map)) out.push_back(map);
      }
      size_t k = 0;
      while (k < gens.size() && ++pos[k] == cands[k].size()) {
        pos[k] = 0;
        ++k;
      }
      if (k == gens.size()) break;
    }
  };
  collect(*a.N, *b.N, gens_N, isoN);
  collect(*a.M, *b.M, gens_M, isoM);
  collect(*a.L, *b.L, gens_L, isoL);

  TcmIso iso;
  for (const auto& fn : isoN) {
    iso.on_N = fn;
    for (const auto& fm : isoM) {
      iso.on_M = fm;
      bool d1ok = true;
      for (int m = 0; m < a.M->order() && d1ok; ++m)
        d1ok = fn[a.d1(m)] == b.d1.map[fm[m]];
      if (!d1ok) continue;
      for (const auto& fl : isoL) {
        iso.on_L = fl;
        if (hom_images_ok(a, b, iso)) return iso;
      }
    }
  }
  return std::nullopt;
}

int mor1_action_on_mor2(const CrossedModule& x, const InnCell1& m, int l) {
  const int e = x.G->identity();
  InnCell1 cell{m.f, m.F, e};
  InnCell1 icell = inverse_mor1(x, cell);
  icell.src = e;  // 1-cells from the identity object form a group
  InnCell2 from_id =
      make_mor2(x, id_mor1(x, e), InnCell1{x.t(l), x.H->inv(l), e});
  InnCell2 idm = id_mor2(cell), idmi = id_mor2(icell);
  InnCell2 res = tensor_mor2(x, tensor_mor2(x, idm, from_id), idmi);
  return label_mor2(x, res);
}

}  // namespace cgt
