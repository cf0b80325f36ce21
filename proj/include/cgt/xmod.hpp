#pragma once

#include <string>
#include <vector>

#include "cgt/group.hpp"
#include "cgt/report.hpp"

namespace cgt {

// t : H -> G with a G-action on H.  Axioms (checked by the validator):
//   equivariance  t(^g h) = g t(h) g^-1
//   peiffer       ^{t(h)} h' = h h' h^-1
struct CrossedModule {
  std::string name;
  GroupPtr H, G;
  GroupHom t;
  GroupAction alpha;
  int act(int g, int h) const { return alpha(g, h); }
};

CrossedModule make_crossed_module(std::string name, GroupPtr H, GroupPtr G,
                                  GroupHom t, GroupAction alpha);

ValidationReport validate_crossed_module(const CrossedModule& x);

// (id : G -> G) with alpha = conjugation.
CrossedModule inn_crossed_module(GroupPtr g);
// (Ad : G -> Aut(G)) with Aut(G) acting tautologically.
CrossedModule aut_crossed_module(GroupPtr g);
// Z/2 -> Z/4 inclusion with trivial action; a handy abelian corpus instance.
CrossedModule incl_z2_z4();

// Morphism of crossed modules: a square of homs commuting with t and alpha.
struct CrossedModuleHom {
  GroupHom on_H, on_G;
};

// The four-term tower (1 -> Z(G)), (G -> G), (G -> Aut G), (1 -> Out G)
// with the evident maps; exactness is reported levelwise at both group levels.
struct OneGroupTower {
  std::vector<CrossedModule> steps;
  std::vector<CrossedModuleHom> maps;  // steps[i] -> steps[i+1]
  ValidationReport report;
};
OneGroupTower one_group_tower(GroupPtr g);

// Commutative square of P-groups with structure map hmap : M x N -> L.
struct CrossedSquare {
  std::string name;
  GroupPtr L, M, N, P;
  GroupHom f;  // L -> M
  GroupHom u;  // L -> N
  GroupHom v;  // M -> P
  GroupHom g;  // N -> P
  GroupAction actP_L, actP_M, actP_N;
  std::vector<int> hmap;  // |M| x |N|, flattened -> L index
  int h(int m, int n) const { return hmap[(size_t)m * N->order() + n]; }
};

// Identity square on X: both horizontal maps identities, both vertical t,
// hmap(h, g) = h * ^g(h^-1).
CrossedSquare identity_square(const CrossedModule& x);

ValidationReport validate_crossed_square(const CrossedSquare& s);

// Classical consequences asserted exhaustively: im(t) normal in G, ker(t)
// central in H.
ValidationReport crossed_module_consequences(const CrossedModule& x);

}  // namespace cgt
