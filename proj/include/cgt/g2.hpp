#pragma once

#include "cgt/report.hpp"
#include "cgt/xmod.hpp"

namespace cgt {

// Cells of the one-object 2-groupoid induced by a crossed module.  The
// composition convention is fixed once: traversing a (first) then b gives
// the group product b*a, and a 2-cell h on g has target t(h)*g.
struct OneCell {
  int g;
};

struct TwoCell {
  int g;  // source 1-cell
  int h;  // label
};

inline OneCell compose_1(const CrossedModule& x, OneCell a, OneCell b) {
  return {x.G->mul(b.g, a.g)};
}

inline int two_cell_target(const CrossedModule& x, TwoCell a) {
  return x.G->mul(x.t(a.h), a.g);
}

// a then b vertically; requires target(a) == source(b)
TwoCell vcompose_2(const CrossedModule& x, TwoCell a, TwoCell b);

// a then b along the object: source g_b*g_a, label h_b * ^{g_b}h_a
inline TwoCell hcompose_2(const CrossedModule& x, TwoCell a, TwoCell b) {
  return {x.G->mul(b.g, a.g), x.H->mul(b.h, x.act(b.g, a.h))};
}

inline TwoCell vinverse_2(const CrossedModule& x, TwoCell a) {
  return {two_cell_target(x, a), x.H->inv(a.h)};
}

inline TwoCell hinverse_2(const CrossedModule& x, TwoCell a) {
  int gi = x.G->inv(a.g);
  return {gi, x.act(gi, x.H->inv(a.h))};
}

// Exhaustive 2-group axiom suite: unit laws, both associativities,
// interchange, and invertibility of all cells.
ValidationReport check_2group_axioms(const CrossedModule& x,
                                     long long budget = 100000000);

}  // namespace cgt
