#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgt {

// Structured failure for the make_* constructors: kind is one of the
// documented error names (NotAssociative, NoIdentity, NoInverse,
// NotHomomorphism, NotAction, ...) and witness is the offending tuple.
class validation_error : public std::runtime_error {
 public:
  validation_error(std::string kind, std::string witness = "")
      : std::runtime_error(witness.empty() ? kind : kind + " " + witness),
        kind_(std::move(kind)),
        witness_(std::move(witness)) {}
  const std::string& kind() const { return kind_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string kind_, witness_;
};

class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Finite group on canonical element indices 0..order-1, given by its Cayley
// table.  Immutable after construction; all higher layers speak in indices
// and share groups by pointer.
class FiniteGroup {
 public:
  static FiniteGroup make(std::vector<std::vector<int>> table,
                          std::vector<std::string> labels = {},
                          std::string name = "");

  int order() const { return n_; }
  int mul(int a, int b) const { return mul_[(size_t)a * n_ + b]; }
  int identity() const { return e_; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(g, mul(x, inv(g))); }
  int commutator(int a, int b) const {
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }
  int element_order(int a) const;
  bool is_abelian() const;

  const std::string& name() const { return name_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_custom_labels() const { return custom_labels_; }

  std::vector<std::vector<int>> table() const;

 private:
  FiniteGroup() = default;
  int n_ = 0;
  int e_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  bool custom_labels_ = false;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(const std::vector<std::vector<int>>& table,
                    std::vector<std::string> labels = {},
                    std::string name = "");

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
// Closure of permutation generators on {0..degree-1}; labels in cycle notation.
GroupPtr permutation_group(int degree, std::vector<std::vector<int>> generators,
                           std::string name = "");
GroupPtr symmetric_3();
GroupPtr dihedral_4();

// Total map between groups, validated to be a homomorphism.
struct GroupHom {
  GroupPtr dom, cod;
  std::vector<int> map;
  int operator()(int x) const { return map[x]; }
};

GroupHom make_hom(GroupPtr dom, GroupPtr cod, std::vector<int> map);
GroupHom identity_hom(GroupPtr g);
GroupHom compose_hom(const GroupHom& first, const GroupHom& then);
std::vector<int> kernel_elements(const GroupHom& f);
std::vector<int> image_elements(const GroupHom& f);

// Left action of `actor` on `target` by automorphisms.
struct GroupAction {
  GroupPtr actor, target;
  std::vector<int> act;  // actor.order() x target.order(), flattened
  int operator()(int a, int x) const {
    return act[(size_t)a * target->order() + x];
  }
};

GroupAction make_action(GroupPtr actor, GroupPtr target,
                        std::vector<std::vector<int>> table);
GroupAction trivial_action(GroupPtr actor, GroupPtr target);
GroupAction conjugation_action(GroupPtr g);

// Subgroup with its inclusion data: elems[i] is the parent index of the
// subgroup element i.
struct Subgroup {
  GroupPtr grp;
  std::vector<int> elems;
  std::vector<int> parent_to_sub;  // -1 when not in the subgroup
};

Subgroup subgroup_from_elements(GroupPtr g, std::vector<int> elems,
                                std::string name = "");
std::vector<int> generated_subgroup(const FiniteGroup& g,
                                    const std::vector<int>& gens);
std::vector<int> normal_closure(const FiniteGroup& g,
                                const std::vector<int>& gens);
bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& elems);

// Quotient by a normal subgroup; proj maps parent indices onto coset indices.
struct Quotient {
  GroupPtr grp;
  std::vector<int> proj;
};
Quotient quotient_group(GroupPtr g, const std::vector<int>& normal_elems,
                        std::string name = "");

Subgroup center(GroupPtr g);

// All automorphisms of g, each as a permutation of its indices; the group
// table is composition ("a then b" composes to b after a).
struct AutomorphismGroup {
  GroupPtr grp;
  std::vector<std::vector<int>> perms;
};
AutomorphismGroup automorphism_group(GroupPtr g);

// Elements are pairs (f, F) indexed f * |H| + F with multiplication
// (f2,F2)(f1,F1) = (f2 f1, F2 * alpha(f2)(F1)).
struct SemidirectProduct {
  GroupPtr grp;
  GroupPtr acting, acted;
  int pair(int f, int F) const { return f * acted->order() + F; }
  int fpart(int i) const { return i / acted->order(); }
  int Fpart(int i) const { return i % acted->order(); }
};
SemidirectProduct semidirect_product(GroupPtr g, GroupPtr h,
                                     const GroupAction& alpha,
                                     std::string name = "");

// Backtracking isomorphism search mapping a generating sequence, with an
// exhaustive fallback for |G| <= 12.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                 const FiniteGroup& b);

std::vector<int> minimal_generating_sequence(const FiniteGroup& g);

std::string tuple_witness(std::initializer_list<int> idx);

}  // namespace cgt
