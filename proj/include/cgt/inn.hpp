#pragma once

#include <vector>

#include "cgt/report.hpp"
#include "cgt/xmod.hpp"

namespace cgt {

// 0-cells are objects of the underlying 2-group, i.e. G-indices.
struct InnCell0 {
  int g;
};

// 1-cell from object src: a triangle (f, F) with derived target t(F)*f*src.
// The target is never stored; parallelism is always recomputed.
struct InnCell1 {
  int f;
  int F;
  int src;
  bool operator==(const InnCell1&) const = default;
};

inline int target_mor1(const CrossedModule& x, const InnCell1& m) {
  return x.G->mul(x.t(m.F), x.G->mul(m.f, m.src));
}

inline InnCell1 id_mor1(const CrossedModule& x, int q) {
  return {x.G->identity(), x.H->identity(), q};
}

// a then b; the (f, F) pair composes by the semidirect rule
// (f2,F2)(f1,F1) = (f2 f1, F2 ^{f2}F1).
InnCell1 compose_mor1(const CrossedModule& x, const InnCell1& a,
                      const InnCell1& b);

InnCell1 inverse_mor1(const CrossedModule& x, const InnCell1& m);

// Monoidal product; the first argument is the outer (left) factor:
// object q_a q_b, f-part f_a Ad_{q_a}(f_b), F-part F_a ^{f_a q_a}F_b.
InnCell1 tensor_mor1(const CrossedModule& x, const InnCell1& a,
                     const InnCell1& b);

// Whiskering by an object. Left: g enters first along the path, so the
// cell is untouched and the base object becomes src*g. Right: g leaves
// last, conjugating the cell: (g f g^-1, ^g F; g*src).
InnCell1 whisker_obj_left(const CrossedModule& x, InnCell0 g,
                          const InnCell1& m);
InnCell1 whisker_obj_right(const CrossedModule& x, const InnCell1& m,
                           InnCell0 g);

// 2-cell between parallel 1-cells, stored by boundary only; the label
// K^-1 F is forced by the boundary and recomputed on demand.
struct InnCell2 {
  InnCell1 src1, tgt1;
  bool operator==(const InnCell2&) const = default;
};

bool parallel_mor1(const CrossedModule& x, const InnCell1& a,
                   const InnCell1& b);
InnCell2 make_mor2(const CrossedModule& x, const InnCell1& src,
                   const InnCell1& tgt);
int label_mor2(const CrossedModule& x, const InnCell2& p);

inline InnCell2 id_mor2(const InnCell1& m) { return {m, m}; }

InnCell2 vcompose_mor2(const CrossedModule& x, const InnCell2& p,
                       const InnCell2& q);
// composition along 0-cells (p first, then q)
InnCell2 hcompose_mor2(const CrossedModule& x, const InnCell2& p,
                       const InnCell2& q);
InnCell2 whisker_mor2_pre(const CrossedModule& x, const InnCell1& n,
                          const InnCell2& p);
InnCell2 whisker_mor2_post(const CrossedModule& x, const InnCell2& p,
                           const InnCell1& n);
InnCell2 tensor_mor2(const CrossedModule& x, const InnCell2& p,
                     const InnCell2& q);

enum class WhiskerSide { left, right };
// Tensor with a 1-cell (promoted to its identity 2-cell) on either side.
InnCell2 whisker_mor2(const CrossedModule& x, const InnCell2& p,
                      const InnCell1& m, WhiskerSide side);

// Enumerated cell sets of the 2-groupoid underlying the 3-group.
struct InnGroupoid {
  CrossedModule x;
  std::vector<InnCell1> cells1;        // all |G|^2 |H| one-cells
  std::vector<InnCell2> cells2;        // one per ordered parallel pair
  long long n_obj = 0, n_mor1 = 0, n_mor2 = 0;
};

// Budget cap: |G|^2 |H| must not exceed `budget` (default 10^4).
InnGroupoid build_inn(const CrossedModule& x, long long budget = 10000);

int pi0(const InnGroupoid& inn);
// connecting 1-cell q -> e used by the contraction: (q^-1, e; q)
InnCell1 connecting_mor1(const CrossedModule& x, int q);

ValidationReport check_codiscrete(const InnGroupoid& inn);
// strict-2-groupoid axiom suite plus the composition/whiskering label
// formulas checked against the boundary-forced label
ValidationReport check_strictness(const InnGroupoid& inn);
ValidationReport check_exact_sequence(const InnGroupoid& inn);

struct ContractionWitness {
  std::vector<InnCell1> to_identity;  // indexed by object
  ValidationReport report;
};
ContractionWitness contractibility_witness(const InnGroupoid& inn);

// Conjugation by (h,H) vs the action of d1(h,H) on Mor1^I differ; the unique
// 2-cell between them has label H ^{h f h^-1} H^-1.
struct PeifferWitness {
  bool exists = false;
  InnCell1 m, mp;      // the witness pair (src = identity object)
  int discrepancy = 0;  // the 3-cell label
  ValidationReport report;
};
PeifferWitness peiffer_failure_witness(const InnGroupoid& inn);

}  // namespace cgt
