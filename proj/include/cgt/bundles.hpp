#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgt/group.hpp"
#include "cgt/report.hpp"
#include "cgt/simplicial.hpp"

namespace cgt {

// Combinatorial cover: patch points carry their patch id and base point.
// Adjacency on the base is diagnostic only.
struct FiniteCover {
  std::string name;
  int base_size = 0;
  std::vector<std::vector<int>> patches;  // patch -> list of base points
  std::vector<std::pair<int, int>> adjacency;

  // flattened patch points
  std::vector<int> point_patch, point_base;
  int n_points() const { return (int)point_base.size(); }
};

FiniteCover make_cover(std::string name, int base_size,
                       std::vector<std::vector<int>> patches,
                       std::vector<std::pair<int, int>> adjacency = {});

// Transition data g(x,y) on ordered same-fiber pairs of patch points;
// g(y,z) g(x,y) = g(x,z) and g(x,x) = e.
struct Cocycle {
  std::string name;
  FiniteCover cover;
  GroupPtr G;
  std::vector<std::vector<int>> g;  // n_points x n_points, -1 off-fiber
  int operator()(int x, int y) const { return g[x][y]; }
};

// `values` lists (x, y, gidx) for same-fiber pairs; omitted pairs are filled
// by identity/inverse/composition closure when derivable.
Cocycle make_cocycle(std::string name, FiniteCover cover, GroupPtr G,
                     const std::vector<std::array<int, 3>>& values);

ValidationReport validate_cocycle(const Cocycle& c);

// Objects are patch points, one morphism per ordered same-fiber pair.
FiniteCategory cech_groupoid(const FiniteCover& cover);

// Objects are (patch point, group element); one morphism
// (y,h) -> (y', g(y,y') h) per same-fiber pair.
FiniteCategory pullback_groupoid(const Cocycle& c);

// Total space from the pushout of source/target: classes of (y, h) under
// (y,h) ~ (y', g(y,y') h), with free transitive right G-action per fiber.
struct TotalSpace {
  int n = 0;
  std::vector<int> proj;                 // class -> base point
  std::vector<std::vector<int>> action;  // class x G -> class
  std::vector<std::vector<int>> incl;    // patch point x G -> class
};

TotalSpace reconstruct_total(const Cocycle& c);

// Components of the graph on classes whose edges join images of the same
// (patch, sheet); 1 signals global twisting, |G| signals a product.
int patch_sheet_components(const Cocycle& c, const TotalSpace& t);

// Transition data re-extracted from the reconstructed inclusions, after
// gauging each patch by `gauge` (one G-element per patch).
Cocycle reextract_transitions(const Cocycle& c, const TotalSpace& t,
                              const std::vector<int>& gauge);

// Do a and b differ by a coboundary (a per-patch gauge)?
bool differ_by_coboundary(const Cocycle& a, const Cocycle& b);

// G-equivariant fiber-preserving bijection between totals, if any.
bool totals_isomorphic(const Cocycle& ca, const TotalSpace& a,
                       const Cocycle& cb, const TotalSpace& b);

ValidationReport check_reconstruction(const Cocycle& c);

}  // namespace cgt
