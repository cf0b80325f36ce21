#pragma once

#include <string>
#include <vector>

#include "cgt/report.hpp"
#include "cgt/xmod.hpp"

namespace cgt {

// Category on index sets: morphism a then b composes to comp[a][b]
// (-1 when sources/targets do not match).
struct FiniteCategory {
  std::string name;
  int n_obj = 0;
  std::vector<int> src, tgt;
  std::vector<int> id_of;               // identity morphism per object
  std::vector<std::vector<int>> comp;   // comp[a][b] = a then b
  int n_mor() const { return (int)src.size(); }
  int compose(int a, int b) const { return comp[a][b]; }
};

ValidationReport validate_category(const FiniteCategory& c);
bool is_groupoid(const FiniteCategory& c);

FiniteCategory delooping(GroupPtr g);       // one object, morphisms = G
FiniteCategory linear_poset(int n_objects);  // 0 <= 1 <= ... as a category
FiniteCategory codiscrete_groupoid(int n_objects);

// Objects are morphisms of c; morphisms are commuting triangles with a
// fixed source object.  For c = delooping(G) this is the codiscrete
// groupoid on the elements of G.
FiniteCategory tangent_category(const FiniteCategory& c);

// Levels 0..depth with face maps at 1..depth and degeneracies at 0..depth-1.
struct TruncatedSimplicialSet {
  std::string name;
  int depth = 0;
  std::vector<long long> size;                      // per level
  std::vector<std::vector<std::vector<int>>> face;  // face[n][i]
  std::vector<std::vector<std::vector<int>>> deg;   // deg[n][i]
  int d(int n, int i, int s) const { return face[n][i][s]; }
  int s(int n, int i, int x) const { return deg[n][i][x]; }
};

ValidationReport validate_simplicial(const TruncatedSimplicialSet& x);

// Nerve together with its chain dictionaries: chains[n][idx] lists the n
// morphism ids of the simplex (level 0 holds the object id).
struct Nerve {
  TruncatedSimplicialSet s;
  std::vector<std::vector<std::vector<int>>> chains;
};
Nerve nerve(const FiniteCategory& c, int depth);

TruncatedSimplicialSet decalage(const TruncatedSimplicialSet& x);

// Levelwise map commuting with all faces and degeneracies; bijective when
// `expect_bijection`.
ValidationReport check_simplicial_map(const TruncatedSimplicialSet& a,
                                      const TruncatedSimplicialSet& b,
                                      const std::vector<std::vector<int>>& map,
                                      bool expect_bijection);

ValidationReport check_tangent_vs_decalage(const FiniteCategory& c, int depth);

// Bisimplicial grid with rows indexed by the group direction and columns by
// the category direction.
struct TruncatedBisimplicialSet {
  std::string name;
  int depth = 0;  // square truncation (depth, depth)
  std::vector<std::vector<long long>> size;  // size[k][n]
  // row_face[k][n][i] : level (k,n) -> (k-1,n); col_face[k][n][j] : -> (k,n-1)
  std::vector<std::vector<std::vector<std::vector<int>>>> row_face, col_face;
  std::vector<std::vector<std::vector<std::vector<int>>>> row_deg, col_deg;
};

ValidationReport validate_bisimplicial(const TruncatedBisimplicialSet& x);

// Double nerve of the 2-group of a crossed module: column n carries the
// group of n-chains of morphisms, rows are group nerves of those.
struct DoubleNerve {
  TruncatedBisimplicialSet s;
  std::vector<long long> gamma_order;  // |Gamma_n| per column
};
DoubleNerve double_nerve(const CrossedModule& x, int depth,
                         long long budget = 2000000);

ValidationReport check_bisimplicial_sequence(const CrossedModule& x, int depth,
                                             long long budget = 2000000);

ValidationReport check_W_identifications(GroupPtr g, int depth);

// W-bar of the constant simplicial group on g, reduced to level tuples G^n.
TruncatedSimplicialSet wbar_constant(GroupPtr g, int depth);

}  // namespace cgt
