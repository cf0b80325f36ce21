#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgt/inn.hpp"
#include "cgt/report.hpp"
#include "cgt/xmod.hpp"

namespace cgt {

// Normal length-2 complex L -> M -> N of N-groups with a Peiffer lifting
// {.,.} : M x M -> L stored as a full table.  The stored lifting is the
// forced 3-cell from the conjugation 2-cell to the action 2-cell; the
// definition axioms hold for its pointwise inverse, which the validator and
// the induced M-action use.
struct TwoCrossedModule {
  std::string name;
  GroupPtr L, M, N;
  GroupHom d2;  // L -> M
  GroupHom d1;  // M -> N
  GroupAction actN_M, actN_L;
  std::vector<int> peiffer;  // |M| x |M| -> L index
  int pf(int m, int mp) const { return peiffer[(size_t)m * M->order() + mp]; }
  // orientation in which the definition axioms hold
  int pfx(int m, int mp) const { return L->inv(pf(m, mp)); }
};

ValidationReport validate_2crossed(const TwoCrossedModule& t);

// ^m l := l {d2 l^-1, m}, evaluated in the axiom orientation; together with
// d2 this is a crossed module, which the validator asserts.
GroupAction induced_action(const TwoCrossedModule& t);

// The 2-crossed module of the inner-automorphism 3-group of x:
// N = G, M = G x| H, L = H, d1(f,F) = t(F)f, d2(l) = (t(l), l^-1),
// {(h,H),(f,F)} = H ^{h f h^-1} H^-1.
struct ExtractedTcm {
  TwoCrossedModule tcm;
  SemidirectProduct gh;  // pair indexing for M
};
ExtractedTcm extract_from_inn(const CrossedModule& x);

// Nonabelian mapping cone of a crossed square: L -> N x| M -> P with
// d1(n,m) = v(m) g(n), d2(l) = (u(l), f(l)^-1), lifting hmap(m1, n1 n2 n1^-1).
ExtractedTcm mapping_cone(const CrossedSquare& s);

struct Homology {
  GroupPtr pi0, pi1, pi2;
  bool im_d1_was_normal = false;
};
Homology homology(const TwoCrossedModule& t);

struct TcmIso {
  std::vector<int> on_L, on_M, on_N;
};
// Levelwise isomorphism commuting with d2, d1, both actions, and the
// lifting; identity-shaped fast path first, then generator backtracking.
std::optional<TcmIso> find_tcm_isomorphism(const TwoCrossedModule& a,
                                           const TwoCrossedModule& b);
ValidationReport verify_tcm_isomorphism(const TwoCrossedModule& a,
                                        const TwoCrossedModule& b,
                                        const TcmIso& iso);

// Action of a 1-cell on a from-identity 2-cell by the monoidal sandwich
// m (x) l (x) m^-1; returns the resulting label.
int mor1_action_on_mor2(const CrossedModule& x, const InnCell1& m, int l);

}  // namespace cgt
