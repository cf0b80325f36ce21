#include "cgt/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cgt/parallel.hpp"

namespace cgt {

ExecMode& default_exec_mode() {
  static ExecMode mode = ExecMode::parallel;
  return mode;
}

std::string tuple_witness(std::initializer_list<int> idx) {
  std::string s = "(";
  bool first = true;
  for (int i : idx) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

FiniteGroup FiniteGroup::make(std::vector<std::vector<int>> table,
                              std::vector<std::string> labels,
                              std::string name) {
  const int n = (int)table.size();
  if (n == 0) throw validation_error("EmptyTable");
  for (const auto& row : table) {
    if ((int)row.size() != n) throw validation_error("NotSquare");
    for (int v : row)
      if (v < 0 || v >= n) throw validation_error("EntryOutOfRange");
  }

  FiniteGroup g;
  g.n_ = n;
  g.mul_.resize((size_t)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul_[(size_t)a * n + b] = table[a][b];

  long long w = find_counterexample((long long)n * n * n, [&](long long i) {
    int a = (int)(i / (n * n)), b = (int)(i / n % n), c = (int)(i % n);
    return g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c));
  });
  if (w >= 0) {
    int a = (int)(w / (n * n)), b = (int)(w / n % n), c = (int)(w % n);
    throw validation_error("NotAssociative", tuple_witness({a, b, c}));
  }

  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool unit = true;
    for (int x = 0; x < n && unit; ++x)
      unit = g.mul(cand, x) == x && g.mul(x, cand) == x;
    if (unit) {
      e = cand;
      break;
    }
  }
  if (e < 0) throw validation_error("NoIdentity");
  g.e_ = e;

  g.inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == e && g.mul(b, a) == e) {
        g.inv_[a] = b;
        break;
      }
    if (g.inv_[a] < 0)
      throw validation_error("NoInverse", tuple_witness({a}));
  }

  if (!labels.empty()) {
    if ((int)labels.size() != n) throw validation_error("LabelCountMismatch");
    std::set<std::string> seen(labels.begin(), labels.end());
    if ((int)seen.size() != n) throw validation_error("DuplicateLabels");
    g.labels_ = std::move(labels);
    g.custom_labels_ = true;
  } else {
    g.labels_.resize(n);
    for (int i = 0; i < n; ++i) g.labels_[i] = std::to_string(i);
  }
  g.name_ = std::move(name);
  return g;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != e_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupPtr make_group(const std::vector<std::vector<int>>& table,
                    std::vector<std::string> labels, std::string name) {
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::make(table, std::move(labels), std::move(name)));
}

GroupPtr trivial_group() {
  static GroupPtr g = make_group({{0}}, {"e"}, "1");
  return g;
}

GroupPtr cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return make_group(t, {}, "Z" + std::to_string(n));
}

namespace {

std::string cycle_label(const std::vector<int>& p) {
  const int n = (int)p.size();
  std::vector<bool> done(n, false);
  std::string s;
  for (int i = 0; i < n; ++i) {
    if (done[i] || p[i] == i) continue;
    s += "(";
    int j = i;
    do {
      s += std::to_string(j + 1);
      done[j] = true;
      j = p[j];
    } while (j != i);
    s += ")";
  }
  return s.empty() ? "e" : s;
}

std::vector<int> perm_compose(const std::vector<int>& a,
                              const std::vector<int>& b) {
  // right-to-left: (a*b)(x) = a(b(x))
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

}  // namespace

GroupPtr permutation_group(int degree, std::vector<std::vector<int>> generators,
                           std::string name) {
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> elems{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        auto y = perm_compose(g, x);
        if (elems.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> list(elems.begin(), elems.end());
  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < (int)list.size(); ++i) idx[list[i]] = i;
  const int n = (int)list.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = cycle_label(list[a]);
    for (int b = 0; b < n; ++b)
      table[a][b] = idx[perm_compose(list[a], list[b])];
  }
  return make_group(table, labels, std::move(name));
}

GroupPtr symmetric_3() {
  static GroupPtr g = permutation_group(3, {{1, 0, 2}, {1, 2, 0}}, "S3");
  return g;
}

GroupPtr dihedral_4() {
  // symmetries of the square 0123: rotation + reflection
  static GroupPtr g =
      permutation_group(4, {{1, 2, 3, 0}, {1, 0, 3, 2}}, "D4");
  return g;
}

GroupHom make_hom(GroupPtr dom, GroupPtr cod, std::vector<int> map) {
  if ((int)map.size() != dom->order())
    throw validation_error("MapSizeMismatch");
  for (int v : map)
    if (v < 0 || v >= cod->order())
      throw validation_error("MapEntryOutOfRange");
  const int n = dom->order();
  long long w = find_counterexample((long long)n * n, [&](long long i) {
    int x = (int)(i / n), y = (int)(i % n);
    return map[dom->mul(x, y)] != cod->mul(map[x], map[y]);
  });
  if (w >= 0)
    throw validation_error("NotHomomorphism",
                           tuple_witness({(int)(w / n), (int)(w % n)}));
  return GroupHom{std::move(dom), std::move(cod), std::move(map)};
}

GroupHom identity_hom(GroupPtr g) {
  std::vector<int> m(g->order());
  std::iota(m.begin(), m.end(), 0);
  return GroupHom{g, g, std::move(m)};
}

GroupHom compose_hom(const GroupHom& first, const GroupHom& then) {
  std::vector<int> m(first.dom->order());
  for (int x = 0; x < first.dom->order(); ++x) m[x] = then(first(x));
  return GroupHom{first.dom, then.cod, std::move(m)};
}

std::vector<int> kernel_elements(const GroupHom& f) {
  std::vector<int> ker;
  for (int x = 0; x < f.dom->order(); ++x)
    if (f(x) == f.cod->identity()) ker.push_back(x);
  return ker;
}

std::vector<int> image_elements(const GroupHom& f) {
  std::set<int> im(f.map.begin(), f.map.end());
  return {im.begin(), im.end()};
}

GroupAction make_action(GroupPtr actor, GroupPtr target,
                        std::vector<std::vector<int>> table) {
  const int na = actor->order(), nt = target->order();
  if ((int)table.size() != na) throw validation_error("ActionSizeMismatch");
  GroupAction a;
  a.actor = actor;
  a.target = target;
  a.act.resize((size_t)na * nt);
  for (int g = 0; g < na; ++g) {
    if ((int)table[g].size() != nt)
      throw validation_error("ActionSizeMismatch");
    for (int x = 0; x < nt; ++x) {
      if (table[g][x] < 0 || table[g][x] >= nt)
        throw validation_error("ActionEntryOutOfRange");
      a.act[(size_t)g * nt + x] = table[g][x];
    }
  }
  // each act(g,-) an automorphism
  for (int g = 0; g < na; ++g) {
    std::vector<bool> hit(nt, false);
    for (int x = 0; x < nt; ++x) {
      int y = a(g, x);
      if (hit[y])
        throw validation_error("NotAction", "not injective " +
                                                tuple_witness({g, x}));
      hit[y] = true;
    }
    for (int x = 0; x < nt; ++x)
      for (int y = 0; y < nt; ++y)
        if (a(g, target->mul(x, y)) != target->mul(a(g, x), a(g, y)))
          throw validation_error("NotAction",
                                 "not multiplicative " + tuple_witness({g, x, y}));
  }
  for (int x = 0; x < nt; ++x)
    if (a(actor->identity(), x) != x)
      throw validation_error("NotAction", "unit fails " + tuple_witness({x}));
  for (int g = 0; g < na; ++g)
    for (int h = 0; h < na; ++h)
      for (int x = 0; x < nt; ++x)
        if (a(actor->mul(g, h), x) != a(g, a(h, x)))
          throw validation_error("NotAction",
                                 "not an action " + tuple_witness({g, h, x}));
  return a;
}

GroupAction trivial_action(GroupPtr actor, GroupPtr target) {
  GroupAction a;
  a.actor = actor;
  a.target = target;
  a.act.resize((size_t)actor->order() * target->order());
  for (int g = 0; g < actor->order(); ++g)
    for (int x = 0; x < target->order(); ++x)
      a.act[(size_t)g * target->order() + x] = x;
  return a;
}

GroupAction conjugation_action(GroupPtr g) {
  GroupAction a;
  a.actor = g;
  a.target = g;
  const int n = g->order();
  a.act.resize((size_t)n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) a.act[(size_t)x * n + y] = g->conj(x, y);
  return a;
}

Subgroup subgroup_from_elements(GroupPtr g, std::vector<int> elems,
                                std::string name) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<int> back(g->order(), -1);
  for (int i = 0; i < (int)elems.size(); ++i) back[elems[i]] = i;
  const int m = (int)elems.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = g->label(elems[i]);
    for (int j = 0; j < m; ++j) {
      int p = g->mul(elems[i], elems[j]);
      if (back[p] < 0)
        throw validation_error("NotClosed", tuple_witness({elems[i], elems[j]}));
      table[i][j] = back[p];
    }
  }
  return Subgroup{make_group(table, labels, std::move(name)), std::move(elems),
                  std::move(back)};
}

std::vector<int> generated_subgroup(const FiniteGroup& g,
                                    const std::vector<int>& gens) {
  std::set<int> elems{g.identity()};
  std::vector<int> frontier{g.identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : gens) {
        int y = g.mul(s, x);
        if (elems.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

std::vector<int> normal_closure(const FiniteGroup& g,
                                const std::vector<int>& gens) {
  std::vector<int> conj_gens;
  for (int s : gens)
    for (int x = 0; x < g.order(); ++x) conj_gens.push_back(g.conj(x, s));
  return generated_subgroup(g, conj_gens);
}

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
  std::set<int> s(elems.begin(), elems.end());
  for (int h : elems)
    for (int x = 0; x < g.order(); ++x)
      if (!s.count(g.conj(x, h))) return false;
  return true;
}

Quotient quotient_group(GroupPtr g, const std::vector<int>& normal_elems,
                        std::string name) {
  if (!is_normal_subgroup(*g, normal_elems))
    throw validation_error("NotNormal");
  std::set<int> nset(normal_elems.begin(), normal_elems.end());
  const int n = g->order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = (int)reps.size();
    reps.push_back(x);
    for (int h : normal_elems) coset_of[g->mul(x, h)] = c;
  }
  const int m = (int)reps.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i][j] = coset_of[g->mul(reps[i], reps[j])];
  return Quotient{make_group(table, {}, std::move(name)), std::move(coset_of)};
}

Subgroup center(GroupPtr g) {
  std::vector<int> z;
  for (int x = 0; x < g->order(); ++x) {
    bool central = true;
    for (int y = 0; y < g->order() && central; ++y)
      central = g->mul(x, y) == g->mul(y, x);
    if (central) z.push_back(x);
  }
  return subgroup_from_elements(g, z, "Z(" + g->name() + ")");
}

std::vector<int> minimal_generating_sequence(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> have{g.identity()};
  std::set<int> haveset(have.begin(), have.end());
  while ((int)haveset.size() < g.order()) {
    for (int x = 0; x < g.order(); ++x)
      if (!haveset.count(x)) {
        gens.push_back(x);
        auto sub = generated_subgroup(g, gens);
        haveset = std::set<int>(sub.begin(), sub.end());
        break;
      }
  }
  return gens;
}

namespace {

// extend the partial map (images of gens fixed) to a full hom; empty on clash
std::optional<std::vector<int>> close_map(const FiniteGroup& a,
                                          const FiniteGroup& b,
                                          const std::vector<int>& gens,
                                          const std::vector<int>& images) {
  std::vector<int> map(a.order(), -1);
  map[a.identity()] = b.identity();
  std::vector<int> word{a.identity()};
  // BFS over products of generators
  for (size_t head = 0; head < word.size(); ++head) {
    int x = word[head];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = a.mul(gens[gi], x);
      int fy = b.mul(images[gi], map[x]);
      if (map[y] < 0) {
        map[y] = fy;
        word.push_back(y);
      } else if (map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  for (int x = 0; x < a.order(); ++x)
    if (map[x] < 0) return std::nullopt;  // gens do not generate
  // verify homomorphism + bijection
  std::vector<bool> hit(b.order(), false);
  for (int x = 0; x < a.order(); ++x) {
    if (hit[map[x]]) return std::nullopt;
    hit[map[x]] = true;
  }
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return std::nullopt;
  return map;
}

bool iso_backtrack(const FiniteGroup& a, const FiniteGroup& b,
                   const std::vector<int>& gens, std::vector<int>& images,
                   size_t k, std::optional<std::vector<int>>& out) {
  if (k == gens.size()) {
    auto m = close_map(a, b, gens, images);
    if (m) {
      out = std::move(m);
      return true;
    }
    return false;
  }
  const int want = a.element_order(gens[k]);
  for (int y = 0; y < b.order(); ++y) {
    if (b.element_order(y) != want) continue;
    images[k] = y;
    if (iso_backtrack(a, b, gens, images, k + 1, out)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a,
                                                 const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::multiset<int> prof_a, prof_b;
  for (int x = 0; x < a.order(); ++x) prof_a.insert(a.element_order(x));
  for (int x = 0; x < b.order(); ++x) prof_b.insert(b.element_order(x));
  if (prof_a != prof_b) return std::nullopt;

  auto gens = minimal_generating_sequence(a);
  std::vector<int> images(gens.size(), -1);
  std::optional<std::vector<int>> out;
  if (iso_backtrack(a, b, gens, images, 0, out)) return out;
  if (a.order() <= 12) {
    // exhaustive fallback over bijections fixing the identity
    std::vector<int> perm;
    for (int x = 0; x < a.order(); ++x)
      if (x != a.identity()) perm.push_back(x);
    std::vector<int> targets;
    for (int y = 0; y < b.order(); ++y)
      if (y != b.identity()) targets.push_back(y);
    std::sort(targets.begin(), targets.end());
    do {
      std::vector<int> map(a.order());
      map[a.identity()] = b.identity();
      for (size_t i = 0; i < perm.size(); ++i) map[perm[i]] = targets[i];
      bool ok = true;
      for (int x = 0; x < a.order() && ok; ++x)
        for (int y = 0; y < a.order() && ok; ++y)
          ok = map[a.mul(x, y)] == b.mul(map[x], map[y]);
      if (ok) return map;
    } while (std::next_permutation(targets.begin(), targets.end()));
  }
  return std::nullopt;
}

AutomorphismGroup automorphism_group(GroupPtr g) {
  const FiniteGroup& G = *g;
  auto gens = minimal_generating_sequence(G);
  std::vector<std::vector<int>> perms;

  // enumerate all generator-image tuples whose closure is an automorphism
  std::vector<int> images(gens.size(), 0);
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    int want = G.element_order(gens[k]);
    for (int y = 0; y < G.order(); ++y)
      if (G.element_order(y) == want) candidates[k].push_back(y);
  }
  std::vector<size_t> pos(gens.size(), 0);
  if (gens.empty()) {
    perms.push_back({G.identity()});
  } else {
    while (true) {
      for (size_t k = 0; k < gens.size(); ++k) images[k] = candidates[k][pos[k]];
      if (auto m = close_map(G, G, gens, images)) perms.push_back(*m);
      size_t k = 0;
      while (k < gens.size() && ++pos[k] == candidates[k].size()) {
        pos[k] = 0;
        ++k;
      }
      if (k == gens.size()) break;
    }
  }
  std::sort(perms.begin(), perms.end());

  std::map<std::vector<int>, int> idx;
  for (int i = 0; i < (int)perms.size(); ++i) idx[perms[i]] = i;
  const int n = (int)perms.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> c(G.order());
      for (int x = 0; x < G.order(); ++x) c[x] = perms[i][perms[j][x]];
      table[i][j] = idx.at(c);
    }
  return AutomorphismGroup{
      make_group(table, {}, "Aut(" + g->name() + ")"), std::move(perms)};
}

SemidirectProduct semidirect_product(GroupPtr g, GroupPtr h,
                                     const GroupAction& alpha,
                                     std::string name) {
  if (alpha.actor.get() != g.get() || alpha.target.get() != h.get())
    throw validation_error("ActionInvalid", "actor/target mismatch");
  const int ng = g->order(), nh = h->order();
  const int n = ng * nh;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int f2 = 0; f2 < ng; ++f2)
    for (int F2 = 0; F2 < nh; ++F2) {
      int a = f2 * nh + F2;
      labels[a] = "(" + g->label(f2) + "," + h->label(F2) + ")";
      for (int f1 = 0; f1 < ng; ++f1)
        for (int F1 = 0; F1 < nh; ++F1) {
          int b = f1 * nh + F1;
          table[a][b] =
              g->mul(f2, f1) * nh + h->mul(F2, alpha(f2, F1));
        }
    }
  SemidirectProduct s;
  if (name.empty()) name = g->name() + "x" + h->name();
  s.grp = make_group(table, labels, std::move(name));
  s.acting = g;
  s.acted = h;
  return s;
}

}  // namespace cgt
