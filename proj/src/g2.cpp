#include "cgt/g2.hpp"

#include "cgt/parallel.hpp"

namespace cgt {

TwoCell vcompose_2(const CrossedModule& x, TwoCell a, TwoCell b) {
  if (b.g != two_cell_target(x, a))
    throw validation_error("NotComposable",
                           tuple_witness({a.g, a.h, b.g, b.h}));
  return {a.g, x.H->mul(b.h, a.h)};
}

ValidationReport check_2group_axioms(const CrossedModule& x,
                                     long long budget) {
  ValidationReport rep;
  rep.subject = x.name;
  const int ng = x.G->order(), nh = x.H->order();
  const auto& G = *x.G;
  const auto& H = *x.H;

  auto need = [&](long long n) {
    if (n > budget)
      throw budget_error("axiom scan of size " + std::to_string(n) +
                         " exceeds budget " + std::to_string(budget));
    return n;
  };

  // 1-cell group laws are inherited from G; assert them anyway.
  long long w = find_counterexample(need((long long)ng * ng * ng),
                                    [&](long long i) {
    int a = (int)(i / (ng * ng)), b = (int)(i / ng % ng), c = (int)(i % ng);
    OneCell ab = compose_1(x, {a}, {b});
    OneCell bc = compose_1(x, {b}, {c});
    return compose_1(x, ab, {c}).g != compose_1(x, {a}, bc).g;
  });
  rep.add("assoc_1", w < 0);

  w = find_counterexample(need(ng), [&](long long i) {
    int g = (int)i;
    return compose_1(x, {g}, {G.identity()}).g != g ||
           compose_1(x, {G.identity()}, {g}).g != g;
  });
  rep.add("unit_1", w < 0);

  // vertical: unit, associativity, inverse
  w = find_counterexample(need((long long)ng * nh), [&](long long i) {
    TwoCell a{(int)(i / nh), (int)(i % nh)};
    TwoCell id_src{a.g, H.identity()};
    TwoCell id_tgt{two_cell_target(x, a), H.identity()};
    TwoCell va = vcompose_2(x, id_src, a);
    TwoCell av = vcompose_2(x, a, id_tgt);
    return va.g != a.g || va.h != a.h || av.g != a.g || av.h != a.h;
  });
  rep.add("vunit_2", w < 0);

  w = find_counterexample(need((long long)ng * nh * nh * nh),
                          [&](long long i) {
    int g = (int)(i / ((long long)nh * nh * nh));
    int h1 = (int)(i / ((long long)nh * nh) % nh);
    int h2 = (int)(i / nh % nh), h3 = (int)(i % nh);
    TwoCell a{g, h1};
    TwoCell b{two_cell_target(x, a), h2};
    TwoCell c{two_cell_target(x, b), h3};
    TwoCell l = vcompose_2(x, vcompose_2(x, a, b), c);
    TwoCell r = vcompose_2(x, a, vcompose_2(x, b, c));
    return l.g != r.g || l.h != r.h;
  });
  rep.add("vassoc_2", w < 0);

  w = find_counterexample(need((long long)ng * nh), [&](long long i) {
    TwoCell a{(int)(i / nh), (int)(i % nh)};
    TwoCell ai = vinverse_2(x, a);
    TwoCell u = vcompose_2(x, a, ai);
    TwoCell v = vcompose_2(x, ai, a);
    return u.h != H.identity() || v.h != H.identity() || u.g != a.g ||
           v.g != ai.g;
  });
  rep.add("vinverse_2", w < 0);

  // horizontal: unit, associativity, inverse
  w = find_counterexample(need((long long)ng * nh), [&](long long i) {
    TwoCell a{(int)(i / nh), (int)(i % nh)};
    TwoCell id_e{G.identity(), H.identity()};
    TwoCell l = hcompose_2(x, a, id_e);
    TwoCell r = hcompose_2(x, id_e, a);
    return l.g != a.g || l.h != a.h || r.g != a.g || r.h != a.h;
  });
  rep.add("hunit_2", w < 0);

  w = find_counterexample(
      need((long long)ng * ng * ng * nh * nh * nh), [&](long long i) {
        long long j = i;
        int h3 = (int)(j % nh); j /= nh;
        int h2 = (int)(j % nh); j /= nh;
        int h1 = (int)(j % nh); j /= nh;
        int g3 = (int)(j % ng); j /= ng;
        int g2 = (int)(j % ng); j /= ng;
        int g1 = (int)(j % ng);
        TwoCell a{g1, h1}, b{g2, h2}, c{g3, h3};
        TwoCell l = hcompose_2(x, hcompose_2(x, a, b), c);
        TwoCell r = hcompose_2(x, a, hcompose_2(x, b, c));
        return l.g != r.g || l.h != r.h;
      });
  rep.add("hassoc_2", w < 0);

  w = find_counterexample(need((long long)ng * nh), [&](long long i) {
    TwoCell a{(int)(i / nh), (int)(i % nh)};
    TwoCell ai = hinverse_2(x, a);
    TwoCell u = hcompose_2(x, a, ai);
    TwoCell v = hcompose_2(x, ai, a);
    return u.g != G.identity() || u.h != H.identity() ||
           v.g != G.identity() || v.h != H.identity();
  });
  rep.add("hinverse_2", w < 0);

  // functoriality of source/target under horizontal composition
  w = find_counterexample(need((long long)ng * nh * ng * nh),
                          [&](long long i) {
    long long j = i;
    int h2 = (int)(j % nh); j /= nh;
    int g2 = (int)(j % ng); j /= ng;
    int h1 = (int)(j % nh); j /= nh;
    int g1 = (int)(j % ng);
    TwoCell a{g1, h1}, b{g2, h2};
    TwoCell c = hcompose_2(x, a, b);
    return two_cell_target(x, c) !=
           G.mul(two_cell_target(x, b), two_cell_target(x, a));
  });
  rep.add("target_functorial", w < 0);

  // interchange: (a ; b vertical) composed horizontally with (c ; d)
  w = find_counterexample(
      need((long long)ng * ng * nh * nh * nh * nh), [&](long long i) {
        long long j = i;
        int h4 = (int)(j % nh); j /= nh;
        int h3 = (int)(j % nh); j /= nh;
        int h2 = (int)(j % nh); j /= nh;
        int h1 = (int)(j % nh); j /= nh;
        int g2 = (int)(j % ng); j /= ng;
        int g1 = (int)(j % ng);
        TwoCell a{g1, h1};
        TwoCell b{two_cell_target(x, a), h2};
        TwoCell c{g2, h3};
        TwoCell d{two_cell_target(x, c), h4};
        TwoCell lhs = hcompose_2(x, vcompose_2(x, a, b), vcompose_2(x, c, d));
        TwoCell rhs =
            vcompose_2(x, hcompose_2(x, a, c), hcompose_2(x, b, d));
        return lhs.g != rhs.g || lhs.h != rhs.h;
      });
  rep.add("interchange", w < 0, w < 0 ? "" : "tuple#" + std::to_string(w));

  return rep;
}

}  // namespace cgt
