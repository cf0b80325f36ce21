#include "cgt/inn.hpp"

#include <numeric>

#include "cgt/g2.hpp"
#include "cgt/parallel.hpp"

namespace cgt {

InnCell1 compose_mor1(const CrossedModule& x, const InnCell1& a,
                      const InnCell1& b) {
  if (b.src != target_mor1(x, a))
    throw validation_error("NotComposable",
                           tuple_witness({a.f, a.F, a.src, b.f, b.F, b.src}));
  return {x.G->mul(b.f, a.f), x.H->mul(b.F, x.act(b.f, a.F)), a.src};
}

InnCell1 inverse_mor1(const CrossedModule& x, const InnCell1& m) {
  int fi = x.G->inv(m.f);
  return {fi, x.act(fi, x.H->inv(m.F)), target_mor1(x, m)};
}

InnCell1 tensor_mor1(const CrossedModule& x, const InnCell1& a,
                     const InnCell1& b) {
  const auto& G = *x.G;
  return {G.mul(a.f, G.conj(a.src, b.f)),
          x.H->mul(a.F, x.act(G.mul(a.f, a.src), b.F)), G.mul(a.src, b.src)};
}

InnCell1 whisker_obj_left(const CrossedModule& x, InnCell0 g,
                          const InnCell1& m) {
  return {m.f, m.F, x.G->mul(m.src, g.g)};
}

InnCell1 whisker_obj_right(const CrossedModule& x, const InnCell1& m,
                           InnCell0 g) {
  return {x.G->conj(g.g, m.f), x.act(g.g, m.F), x.G->mul(g.g, m.src)};
}

bool parallel_mor1(const CrossedModule& x, const InnCell1& a,
                   const InnCell1& b) {
  return a.src == b.src && target_mor1(x, a) == target_mor1(x, b);
}

InnCell2 make_mor2(const CrossedModule& x, const InnCell1& src,
                   const InnCell1& tgt) {
  if (!parallel_mor1(x, src, tgt))
    throw validation_error("NotParallel",
                           tuple_witness({src.f, src.F, src.src, tgt.f, tgt.F,
                                          tgt.src}));
  return {src, tgt};
}

int label_mor2(const CrossedModule& x, const InnCell2& p) {
  return x.H->mul(x.H->inv(p.tgt1.F), p.src1.F);
}

InnCell2 vcompose_mor2(const CrossedModule& x, const InnCell2& p,
                       const InnCell2& q) {
  if (!(p.tgt1 == q.src1))
    throw validation_error("NotComposable", "vertical boundaries disagree");
  return make_mor2(x, p.src1, q.tgt1);
}

InnCell2 hcompose_mor2(const CrossedModule& x, const InnCell2& p,
                       const InnCell2& q) {
  return make_mor2(x, compose_mor1(x, p.src1, q.src1),
                   compose_mor1(x, p.tgt1, q.tgt1));
}

InnCell2 whisker_mor2_pre(const CrossedModule& x, const InnCell1& n,
                          const InnCell2& p) {
  return make_mor2(x, compose_mor1(x, n, p.src1), compose_mor1(x, n, p.tgt1));
}

InnCell2 whisker_mor2_post(const CrossedModule& x, const InnCell2& p,
                           const InnCell1& n) {
  return make_mor2(x, compose_mor1(x, p.src1, n), compose_mor1(x, p.tgt1, n));
}

InnCell2 tensor_mor2(const CrossedModule& x, const InnCell2& p,
                     const InnCell2& q) {
  return make_mor2(x, tensor_mor1(x, p.src1, q.src1),
                   tensor_mor1(x, p.tgt1, q.tgt1));
}

InnCell2 whisker_mor2(const CrossedModule& x, const InnCell2& p,
                      const InnCell1& m, WhiskerSide side) {
  InnCell2 idm = id_mor2(m);
  return side == WhiskerSide::left ? tensor_mor2(x, idm, p)
                                   : tensor_mor2(x, p, idm);
}

InnGroupoid build_inn(const CrossedModule& x, long long budget) {
  const long long ng = x.G->order(), nh = x.H->order();
  const long long n1 = ng * ng * nh;
  if (n1 > budget)
    throw budget_error("enumeration size " + std::to_string(n1) +
                       " exceeds budget " + std::to_string(budget));
  InnGroupoid inn;
  inn.x = x;
  inn.n_obj = ng;
  inn.cells1.reserve((size_t)n1);
  for (int q = 0; q < ng; ++q)
    for (int f = 0; f < ng; ++f)
      for (int F = 0; F < nh; ++F) inn.cells1.push_back({f, F, q});
  inn.n_mor1 = (long long)inn.cells1.size();
  // one 2-cell per ordered parallel pair: vary the target label
  for (const auto& m : inn.cells1) {
    const int tgt = target_mor1(x, m);
    for (int K = 0; K < nh; ++K) {
      // unique k with t(K) k q = tgt
      int k = x.G->mul(x.G->inv(x.t(K)), x.G->mul(tgt, x.G->inv(m.src)));
      inn.cells2.push_back({m, {k, K, m.src}});
    }
  }
  inn.n_mor2 = (long long)inn.cells2.size();
  return inn;
}

int pi0(const InnGroupoid& inn) {
  const int n = (int)inn.n_obj;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& m : inn.cells1) {
    int a = find(m.src), b = find(target_mor1(inn.x, m));
    if (a != b) parent[a] = b;
  }
  int comps = 0;
  for (int i = 0; i < n; ++i) comps += find(i) == i;
  return comps;
}

InnCell1 connecting_mor1(const CrossedModule& x, int q) {
  return {x.G->inv(q), x.H->identity(), q};
}

ValidationReport check_codiscrete(const InnGroupoid& inn) {
  const CrossedModule& x = inn.x;
  ValidationReport rep;
  rep.subject = x.name;
  const auto& G = *x.G;
  const auto& H = *x.H;
  const long long n1 = inn.n_mor1;

  // between parallel 1-cells the boundary forces exactly one label, and that
  // label is a genuine 2-cell of the underlying 2-group: t(L) f = k
  long long w = find_counterexample(n1 * H.order(), [&](long long i) {
    const InnCell1& m1 = inn.cells1[(size_t)(i / H.order())];
    int K = (int)(i % H.order());
    int tgt = target_mor1(x, m1);
    int k = G.mul(G.inv(x.t(K)), G.mul(tgt, G.inv(m1.src)));
    InnCell1 m2{k, K, m1.src};
    if (!parallel_mor1(x, m1, m2)) return true;
    int L = label_mor2(x, {m1, m2});
    return G.mul(x.t(L), m1.f) != m2.f;
  });
  rep.add("one_2cell_per_parallel_pair", w < 0,
          w < 0 ? "" : "pair#" + std::to_string(w));

  // cell count identity: every parallel pair is hit exactly once
  rep.add("mor2_count", inn.n_mor2 == n1 * H.order());

  // non-parallel pairs admit no 2-cell (the constraint has no solution)
  w = find_counterexample(n1, [&](long long i) {
    const InnCell1& m = inn.cells1[(size_t)i];
    InnCell1 shifted{m.f, m.F, G.mul(m.src, 1 % G.order())};
    if (G.order() == 1) return false;
    return parallel_mor1(x, m, shifted) && !(m == shifted);
  });
  rep.add("distinct_sources_not_parallel", w < 0);
  return rep;
}

ValidationReport check_strictness(const InnGroupoid& inn) {
  const CrossedModule& x = inn.x;
  ValidationReport rep;
  rep.subject = x.name;
  const auto& G = *x.G;
  const auto& H = *x.H;
  const int ng = G.order(), nh = H.order();
  const long long n1 = inn.n_mor1;
  const long long n2 = inn.n_mor2;

  auto cell1_at = [&](long long i) { return inn.cells1[(size_t)i]; };
  // 1-cells with a fixed source object are indexed by (f, F)
  auto cell1_from = [&](int q, long long i) {
    return InnCell1{(int)(i / nh), (int)(i % nh), q};
  };
  const long long per_src = (long long)ng * nh;

  // units and inverses for 1-cell composition
  long long w = find_counterexample(n1, [&](long long i) {
    InnCell1 m = cell1_at(i);
    InnCell1 l = compose_mor1(x, id_mor1(x, m.src), m);
    InnCell1 r = compose_mor1(x, m, id_mor1(x, target_mor1(x, m)));
    InnCell1 mi = inverse_mor1(x, m);
    return !(l == m) || !(r == m) ||
           !(compose_mor1(x, m, mi) == id_mor1(x, m.src)) ||
           !(compose_mor1(x, mi, m) == id_mor1(x, mi.src));
  });
  rep.add("mor1_unit_inverse", w < 0);

  // associativity of 1-cell composition
  w = find_counterexample(n1 * per_src * per_src, [&](long long i) {
    InnCell1 a = cell1_at(i / (per_src * per_src));
    InnCell1 b = cell1_from(target_mor1(x, a), i / per_src % per_src);
    InnCell1 c = cell1_from(target_mor1(x, b), i % per_src);
    return !(compose_mor1(x, compose_mor1(x, a, b), c) ==
             compose_mor1(x, a, compose_mor1(x, b, c)));
  });
  rep.add("mor1_assoc", w < 0, w < 0 ? "" : "tuple#" + std::to_string(w));

  // target compatibility: target of composite = composite of targets
  w = find_counterexample(n1 * per_src, [&](long long i) {
    InnCell1 a = cell1_at(i / per_src);
    InnCell1 b = cell1_from(target_mor1(x, a), i % per_src);
    return target_mor1(x, compose_mor1(x, a, b)) != target_mor1(x, b);
  });
  rep.add("mor1_target_compat", w < 0);

  // tensor: strict monoidal structure on 1-cells
  w = find_counterexample(n1 * n1, [&](long long i) {
    InnCell1 a = cell1_at(i / n1), b = cell1_at(i % n1);
    InnCell1 t = tensor_mor1(x, a, b);
    return t.src != G.mul(a.src, b.src) ||
           target_mor1(x, t) !=
               G.mul(target_mor1(x, a), target_mor1(x, b));
  });
  rep.add("tensor_src_tgt", w < 0);

  w = find_counterexample(n1, [&](long long i) {
    InnCell1 a = cell1_at(i);
    return !(tensor_mor1(x, a, id_mor1(x, G.identity())) == a) ||
           !(tensor_mor1(x, id_mor1(x, G.identity()), a) == a);
  });
  rep.add("tensor_unit", w < 0);

  w = find_counterexample(n1 * n1, [&](long long i) {
    InnCell1 a = cell1_at(i / n1), b = cell1_at(i % n1);
    // agreed evaluation: (id_{q_a} ox b) then (a ox id_{tgt b})
    InnCell1 lhs = tensor_mor1(x, a, b);
    InnCell1 rhs = compose_mor1(
        x, whisker_obj_right(x, b, {a.src}),
        whisker_obj_left(x, {target_mor1(x, b)}, a));
    return !(lhs == rhs);
  });
  rep.add("tensor_whisker_decomposition", w < 0);

  // tensor associativity on sampled triples (full cube is |cells1|^3)
  w = find_counterexample(n1 * n1, [&](long long i) {
    InnCell1 a = cell1_at(i / n1), b = cell1_at(i % n1);
    InnCell1 c = cell1_at((i * 2654435761u) % n1);
    return !(tensor_mor1(x, tensor_mor1(x, a, b), c) ==
             tensor_mor1(x, a, tensor_mor1(x, b, c)));
  });
  rep.add("tensor_assoc", w < 0);

  // whiskering laws
  w = find_counterexample(n1 * ng, [&](long long i) {
    InnCell1 m = cell1_at(i / ng);
    int g = (int)(i % ng);
    InnCell1 l = whisker_obj_left(x, {g}, m);
    InnCell1 r = whisker_obj_right(x, m, {g});
    bool ok = whisker_obj_left(x, {G.identity()}, m) == m &&
              whisker_obj_right(x, m, {G.identity()}) == m &&
              l == tensor_mor1(x, m, id_mor1(x, g)) &&
              r == tensor_mor1(x, id_mor1(x, g), m);
    for (int g2 = 0; g2 < ng && ok; ++g2) {
      ok = whisker_obj_left(x, {g2}, l) ==
               whisker_obj_left(x, {G.mul(g2, g)}, m) &&
           whisker_obj_right(x, r, {g2}) ==
               whisker_obj_right(x, m, {G.mul(g2, g)});
    }
    return !ok;
  });
  rep.add("whisker_laws", w < 0);

  // ---- 2-cell layer ----
  auto cell2_at = [&](long long i) { return inn.cells2[(size_t)i]; };

  // vertical: unit, associativity, inverse, label formula L2 L1
  w = find_counterexample(n2, [&](long long i) {
    InnCell2 p = cell2_at(i);
    InnCell2 l = vcompose_mor2(x, id_mor2(p.src1), p);
    InnCell2 r = vcompose_mor2(x, p, id_mor2(p.tgt1));
    InnCell2 pi = make_mor2(x, p.tgt1, p.src1);
    return !(l == p) || !(r == p) ||
           !(vcompose_mor2(x, p, pi) == id_mor2(p.src1)) ||
           label_mor2(x, vcompose_mor2(x, p, pi)) != H.identity();
  });
  rep.add("mor2_vunit_vinverse", w < 0);

  w = find_counterexample(n2 * nh, [&](long long i) {
    InnCell2 p = cell2_at(i / nh);
    int K = (int)(i % nh);
    // extend p.tgt1 to a third parallel cell
    int tgt = target_mor1(x, p.tgt1);
    int k = G.mul(G.inv(x.t(K)), G.mul(tgt, G.inv(p.tgt1.src)));
    InnCell2 q = make_mor2(x, p.tgt1, {k, K, p.tgt1.src});
    InnCell2 c = vcompose_mor2(x, p, q);
    return label_mor2(x, c) !=
           H.mul(label_mor2(x, q), label_mor2(x, p));
  });
  rep.add("label_vertical_L2L1", w < 0,
          w < 0 ? "" : "pair#" + std::to_string(w));

  // horizontal composition along objects: label L2 ^{f2}L1
  w = find_counterexample(n2 * per_src * nh, [&](long long i) {
    InnCell2 p = cell2_at(i / (per_src * nh));
    long long rest = i % (per_src * nh);
    InnCell1 qs = cell1_from(target_mor1(x, p.src1), rest / nh);
    int K = (int)(rest % nh);
    int tgt = target_mor1(x, qs);
    int k = G.mul(G.inv(x.t(K)), G.mul(tgt, G.inv(qs.src)));
    InnCell2 q = make_mor2(x, qs, {k, K, qs.src});
    InnCell2 c = hcompose_mor2(x, p, q);
    return label_mor2(x, c) !=
           H.mul(label_mor2(x, q), x.act(q.src1.f, label_mor2(x, p)));
  });
  rep.add("label_horizontal", w < 0, w < 0 ? "" : "tuple#" + std::to_string(w));

  // tensor of 2-cells: label L2 ^{f2 q2}L1 (first factor outer)
  w = find_counterexample(n2 * nh * nh, [&](long long i) {
    InnCell2 p = cell2_at(i / (nh * nh));
    long long rest = i % (nh * nh);
    // a second 2-cell derived from a pseudorandom parallel pair
    InnCell2 q = cell2_at((i * 2654435761u) % n2);
    (void)rest;
    InnCell2 c = tensor_mor2(x, p, q);
    return label_mor2(x, c) !=
           H.mul(label_mor2(x, p),
                 x.act(G.mul(p.src1.f, p.src1.src), label_mor2(x, q)));
  });
  rep.add("label_tensor", w < 0);

  // whisker a 2-cell by a 1-cell on either tensor side
  w = find_counterexample(n2 * per_src, [&](long long i) {
    InnCell2 p = cell2_at(i / per_src);
    long long j = i % per_src;
    InnCell1 n{(int)(j / nh), (int)(j % nh),
               (int)((i * 0x9e3779b9u) % ng)};
    InnCell2 right = whisker_mor2(x, p, n, WhiskerSide::right);
    InnCell2 left = whisker_mor2(x, p, n, WhiskerSide::left);
    int L = label_mor2(x, p), Gl = H.identity();
    (void)Gl;
    int fp = G.mul(p.src1.f, p.src1.src);
    int kp = G.mul(p.tgt1.f, p.tgt1.src);
    // identity 2-cell on n has trivial label, so the formulas collapse to
    // L' = ^{kp}e^-1 L ^{fp}e = L and L' = ^{g q_n}L
    bool ok = label_mor2(x, right) == L &&
              label_mor2(x, left) ==
                  x.act(G.mul(n.f, n.src), L);
    (void)fp;
    (void)kp;
    return !ok;
  });
  rep.add("label_whisker_1cell", w < 0);

  // whiskering by objects: left leaves labels alone, right acts by g
  w = find_counterexample(n2 * ng, [&](long long i) {
    InnCell2 p = cell2_at(i / ng);
    int g = (int)(i % ng);
    InnCell2 l = make_mor2(x, whisker_obj_left(x, {g}, p.src1),
                           whisker_obj_left(x, {g}, p.tgt1));
    InnCell2 r = make_mor2(x, whisker_obj_right(x, p.src1, {g}),
                           whisker_obj_right(x, p.tgt1, {g}));
    return label_mor2(x, l) != label_mor2(x, p) ||
           label_mor2(x, r) != x.act(g, label_mor2(x, p));
  });
  rep.add("label_whisker_object", w < 0);

  // interchange between vertical and horizontal composition
  w = find_counterexample(n2 * nh * per_src * nh, [&](long long i) {
    long long j = i;
    int K2 = (int)(j % nh);
    j /= nh;
    long long bs = j % per_src;
    j /= per_src;
    int K1 = (int)(j % nh);
    j /= nh;
    InnCell2 p = cell2_at(j);
    // extend p vertically by K1
    int tgtp = target_mor1(x, p.tgt1);
    int k1 = G.mul(G.inv(x.t(K1)), G.mul(tgtp, G.inv(p.tgt1.src)));
    InnCell2 p2 = make_mor2(x, p.tgt1, {k1, K1, p.tgt1.src});
    // a second column at the target object
    InnCell1 qs = cell1_from(target_mor1(x, p.src1), bs);
    int tgtq = target_mor1(x, qs);
    int k2 = G.mul(G.inv(x.t(K2)), G.mul(tgtq, G.inv(qs.src)));
    InnCell2 q = make_mor2(x, qs, {k2, K2, qs.src});
    InnCell2 q2 = make_mor2(x, q.tgt1, q.tgt1);  // identity extension
    InnCell2 lhs = hcompose_mor2(x, vcompose_mor2(x, p, p2),
                                 vcompose_mor2(x, q, q2));
    InnCell2 rhs = vcompose_mor2(x, hcompose_mor2(x, p, q),
                                 hcompose_mor2(x, p2, q2));
    return !(lhs == rhs);
  });
  rep.add("mor2_interchange", w < 0);

  return rep;
}

ValidationReport check_exact_sequence(const InnGroupoid& inn) {
  const CrossedModule& x = inn.x;
  ValidationReport rep;
  rep.subject = x.name;
  const auto& G = *x.G;
  const auto& H = *x.H;
  const int ng = G.order(), nh = H.order();

  // inclusion on 2-cells: (g,h) |-> identity 2-cell on (e, h; g)
  auto incl = [&](int g, int h) {
    return id_mor2(InnCell1{G.identity(), h, g});
  };
  // surjection on 2-cells: boundary pair |-> bigon (f, L) over f
  auto surj = [&](const InnCell2& p) {
    return TwoCell{p.src1.f, label_mor2(x, p)};
  };

  // injectivity: distinct (g,h) give distinct images
  bool inj = true;
  for (int g = 0; g < ng && inj; ++g)
    for (int h = 0; h < nh && inj; ++h)
      for (int g2 = 0; g2 < ng && inj; ++g2)
        for (int h2 = 0; h2 < nh && inj; ++h2)
          if ((g != g2 || h != h2) && incl(g, h) == incl(g2, h2)) inj = false;
  rep.add("inclusion_injective_mor2", inj);

  // the image bigon is well typed: t(L) f = k
  long long w = find_counterexample((long long)inn.n_mor2, [&](long long i) {
    const InnCell2& p = inn.cells2[(size_t)i];
    TwoCell b = surj(p);
    return G.mul(x.t(b.h), b.g) != p.tgt1.f;
  });
  rep.add("surjection_well_typed", w < 0);

  // surjectivity: every 2-cell of the base has the constructed preimage
  w = find_counterexample((long long)ng * nh, [&](long long i) {
    int g = (int)(i / nh), h = (int)(i % nh);
    InnCell1 s{g, h, G.identity()};
    InnCell1 t{G.mul(x.t(h), g), H.identity(), G.identity()};
    InnCell2 pre = make_mor2(x, s, t);
    TwoCell b = surj(pre);
    return b.g != g || b.h != h;
  });
  rep.add("surjection_onto_mor2", w < 0);

  // exactness: preimage of identity-2-cells-on-identity-1-cells = image
  w = find_counterexample((long long)inn.n_mor2, [&](long long i) {
    const InnCell2& p = inn.cells2[(size_t)i];
    TwoCell b = surj(p);
    bool in_preimage = b.g == G.identity() && b.h == H.identity();
    bool in_image = p.src1 == p.tgt1 && p.src1.f == G.identity();
    return in_preimage != in_image;
  });
  rep.add("image_equals_preimage", w < 0,
          w < 0 ? "" : "cell#" + std::to_string(w));

  // the surjection is functorial for both compositions
  const long long per_src = (long long)ng * nh;
  w = find_counterexample((long long)inn.n_mor2 * nh, [&](long long i) {
    const InnCell2& p = inn.cells2[(size_t)(i / nh)];
    int K = (int)(i % nh);
    int tgt = target_mor1(x, p.tgt1);
    int k = G.mul(G.inv(x.t(K)), G.mul(tgt, G.inv(p.tgt1.src)));
    InnCell2 q = make_mor2(x, p.tgt1, {k, K, p.tgt1.src});
    TwoCell lhs = surj(vcompose_mor2(x, p, q));
    TwoCell rhs = vcompose_2(x, surj(p), surj(q));
    return lhs.g != rhs.g || lhs.h != rhs.h;
  });
  rep.add("surjection_vfunctorial", w < 0);

  w = find_counterexample((long long)inn.n_mor2 * per_src, [&](long long i) {
    const InnCell2& p = inn.cells2[(size_t)(i / per_src)];
    long long j = i % per_src;
    InnCell1 qs{(int)(j / nh), (int)(j % nh), target_mor1(x, p.src1)};
    InnCell2 q = id_mor2(qs);
    TwoCell lhs = surj(hcompose_mor2(x, p, q));
    TwoCell rhs = hcompose_2(x, surj(p), surj(q));
    return lhs.g != rhs.g || lhs.h != rhs.h;
  });
  rep.add("surjection_hfunctorial", w < 0);

  return rep;
}

ContractionWitness contractibility_witness(const InnGroupoid& inn) {
  const CrossedModule& x = inn.x;
  ContractionWitness cw;
  cw.report.subject = x.name;
  const auto& G = *x.G;
  for (int q = 0; q < G.order(); ++q)
    cw.to_identity.push_back(connecting_mor1(x, q));

  long long w = find_counterexample((long long)G.order(), [&](long long i) {
    return target_mor1(x, cw.to_identity[(size_t)i]) != G.identity();
  });
  cw.report.add("connects_to_identity", w < 0);

  // naturality: for every 1-cell m : q -> q', the square with legs r_q and
  // r_{q'} has parallel sides, so the unique filler exists
  w = find_counterexample(inn.n_mor1, [&](long long i) {
    const InnCell1& m = inn.cells1[(size_t)i];
    InnCell1 around = compose_mor1(x, m, cw.to_identity[target_mor1(x, m)]);
    return !parallel_mor1(x, around, cw.to_identity[m.src]);
  });
  cw.report.add("naturality_squares_fillable", w < 0);

  // coherence of the fillers with vertical composition and whiskering: for
  // every 2-cell p : m1 => m2 the two routes around the contraction agree
  w = find_counterexample(inn.n_mor2, [&](long long i) {
    const InnCell2& p = inn.cells2[(size_t)i];
    const InnCell1& r = cw.to_identity[target_mor1(x, p.src1)];
    InnCell2 whiskered = whisker_mor2_post(x, p, r);
    InnCell1 a1 = compose_mor1(x, p.src1, r);
    InnCell1 a2 = compose_mor1(x, p.tgt1, r);
    InnCell2 fill2 = make_mor2(x, a2, cw.to_identity[p.src1.src]);
    InnCell2 fill1 = make_mor2(x, a1, cw.to_identity[p.src1.src]);
    InnCell2 route = vcompose_mor2(x, whiskered, fill2);
    return !(route == fill1);
  });
  cw.report.add("filler_coherence", w < 0);
  return cw;
}

PeifferWitness peiffer_failure_witness(const InnGroupoid& inn) {
  const CrossedModule& x = inn.x;
  PeifferWitness pw;
  pw.report.subject = x.name;
  const auto& G = *x.G;
  const auto& H = *x.H;
  const int ng = G.order(), nh = H.order();
  const int e = G.identity();

  auto mor = [&](int f, int F) { return InnCell1{f, F, e}; };
  auto mul_pair = [&](InnCell1 a, InnCell1 b) {
    // product in the group of 1-cells from the identity object: a * b
    return InnCell1{G.mul(a.f, b.f), H.mul(a.F, x.act(a.f, b.F)), e};
  };
  auto inv_pair = [&](InnCell1 a) {
    int fi = G.inv(a.f);
    return InnCell1{fi, x.act(fi, H.inv(a.F)), e};
  };
  auto d1 = [&](InnCell1 a) { return G.mul(x.t(a.F), a.f); };
  auto act_on = [&](int g, InnCell1 a) {
    return InnCell1{G.conj(g, a.f), x.act(g, a.F), e};
  };

  bool parallel_ok = true, reconcile_ok = true;
  std::string wit;
  for (int hf = 0; hf < ng; ++hf)
    for (int hF = 0; hF < nh; ++hF)
      for (int ff = 0; ff < ng; ++ff) {
        // the discrepancy formula uses only (hf, hF, ff)
        const int P = H.mul(hF, x.act(G.conj(hf, ff), H.inv(hF)));
        for (int fF = 0; fF < nh; ++fF) {
          InnCell1 m = mor(hf, hF), mp = mor(ff, fF);
          InnCell1 conj = mul_pair(mul_pair(m, mp), inv_pair(m));
          InnCell1 act = act_on(d1(m), mp);
          if (!pw.exists && !(conj == act)) {
            pw.exists = true;
            pw.m = m;
            pw.mp = mp;
            pw.discrepancy = P;
            wit = tuple_witness({hf, hF, ff, fF});
          }
          // both evaluations are parallel 1-cells and the unique 3-cell
          // from the conjugation cell to the action cell carries label P,
          // independently of fF
          if (!parallel_mor1(x, conj, act))
            parallel_ok = false;
          else if (label_mor2(x, make_mor2(x, conj, act)) != P)
            reconcile_ok = false;
        }
      }

  pw.report.add("conjugation_action_parallel", parallel_ok);
  pw.report.add("discrepancy_is_forced_3cell", reconcile_ok);
  if (pw.exists)
    pw.report.add("peiffer_identity_fails", true, wit);
  return pw;
}

}  // namespace cgt
