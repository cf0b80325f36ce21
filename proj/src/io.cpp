#include "cgt/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace cgt {

namespace {

struct Lines {
  std::string file;
  std::vector<std::string> lines;
  size_t pos = 0;

  bool eof() const { return pos >= lines.size(); }
  int lineno() const { return (int)pos + 1; }
  const std::string& peek() const { return lines[pos]; }
  std::string next() { return lines[pos++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(file, eof() ? (int)lines.size() : lineno(), msg);
  }
};

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

int to_int(Lines& in, const std::string& tok) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) in.fail("bad integer '" + tok + "'");
    return v;
  } catch (const parse_error&) {
    throw;
  } catch (...) {
    in.fail("bad integer '" + tok + "'");
  }
}

std::vector<int> int_row(Lines& in, int expect) {
  if (in.eof()) in.fail("expected a row of " + std::to_string(expect) +
                        " integers");
  auto toks = tokens(in.peek());
  std::vector<int> out;
  for (const auto& t : toks) out.push_back(to_int(in, t));
  if ((int)out.size() != expect)
    in.fail("expected " + std::to_string(expect) + " integers, got " +
            std::to_string(out.size()));
  in.next();
  return out;
}

GroupPtr need_group(Lines& in, const InputBundle& b, const std::string& name) {
  auto it = b.groups.find(name);
  if (it == b.groups.end()) in.fail("unknown group '" + name + "'");
  return it->second;
}

void parse_group(Lines& in, InputBundle& b, const std::vector<std::string>& hd) {
  if (hd.size() != 3) in.fail("expected: group <name> <order>");
  in.next();
  const std::string name = hd[1];
  const int order = to_int(in, hd[2]);
  if (order <= 0) in.fail("order must be positive");
  if (in.eof() || tokens(in.peek()) != std::vector<std::string>{"table"})
    in.fail("expected 'table'");
  in.next();
  std::vector<std::vector<int>> table;
  for (int r = 0; r < order; ++r) table.push_back(int_row(in, order));
  std::vector<std::string> labels;
  if (!in.eof()) {
    auto t = tokens(in.peek());
    if (!t.empty() && t[0] == "labels") {
      if ((int)t.size() != order + 1)
        in.fail("labels row needs " + std::to_string(order) + " names");
      labels.assign(t.begin() + 1, t.end());
      in.next();
    }
  }
  try {
    auto g = make_group(table, labels, name);
    if (b.groups.count(name)) in.fail("duplicate group '" + name + "'");
    b.groups.emplace(name, g);
    b.group_order.push_back(name);
  } catch (const validation_error& e) {
    in.fail(std::string("invalid group: ") + e.what());
  }
}

void parse_xmod(Lines& in, InputBundle& b, const std::vector<std::string>& hd) {
  if (hd.size() != 2) in.fail("expected: xmod <name>");
  in.next();
  const std::string name = hd[1];
  auto field = [&](const char* key) {
    if (in.eof()) in.fail(std::string("expected '") + key + " <group>'");
    auto t = tokens(in.peek());
    if (t.size() != 2 || t[0] != key)
      in.fail(std::string("expected '") + key + " <group>'");
    in.next();
    return t[1];
  };
  auto H = need_group(in, b, field("H"));
  auto G = need_group(in, b, field("G"));
  if (in.eof()) in.fail("expected 't' row");
  auto t = tokens(in.peek());
  if (t.empty() || t[0] != "t") in.fail("expected 't' row");
  if ((int)t.size() != H->order() + 1)
    in.fail("t row needs " + std::to_string(H->order()) + " entries");
  std::vector<int> tmap;
  for (size_t i = 1; i < t.size(); ++i) tmap.push_back(to_int(in, t[i]));
  in.next();
  if (in.eof() || tokens(in.peek()) != std::vector<std::string>{"alpha"})
    in.fail("expected 'alpha'");
  in.next();
  std::vector<std::vector<int>> act;
  for (int r = 0; r < G->order(); ++r) act.push_back(int_row(in, H->order()));
  try {
    auto x = make_crossed_module(name, H, G, make_hom(H, G, tmap),
                                 make_action(G, H, act));
    if (b.xmods.count(name)) in.fail("duplicate xmod '" + name + "'");
    b.xmods.emplace(name, x);
    b.xmod_order.push_back(name);
  } catch (const validation_error& e) {
    in.fail(std::string("invalid xmod: ") + e.what());
  }
}

void parse_tcm(Lines& in, InputBundle& b, const std::vector<std::string>& hd) {
  if (hd.size() != 2) in.fail("expected: tcm <name>");
  in.next();
  const std::string name = hd[1];
  auto field = [&](const char* key) {
    if (in.eof()) in.fail(std::string("expected '") + key + " <group>'");
    auto t = tokens(in.peek());
    if (t.size() != 2 || t[0] != key)
      in.fail(std::string("expected '") + key + " <group>'");
    in.next();
    return t[1];
  };
  auto L = need_group(in, b, field("L"));
  auto M = need_group(in, b, field("M"));
  auto N = need_group(in, b, field("N"));
  auto row_field = [&](const char* key, int expect) {
    if (in.eof()) in.fail(std::string("expected '") + key + "' row");
    auto t = tokens(in.peek());
    if (t.empty() || t[0] != key) in.fail(std::string("expected '") + key + "' row");
    if ((int)t.size() != expect + 1)
      in.fail(std::string(key) + " row needs " + std::to_string(expect) +
              " entries");
    std::vector<int> out;
    for (size_t i = 1; i < t.size(); ++i) out.push_back(to_int(in, t[i]));
    in.next();
    return out;
  };
  auto d2 = row_field("d2", L->order());
  auto d1 = row_field("d1", M->order());
  auto block = [&](const char* key, int rows, int cols) {
    if (in.eof() || tokens(in.peek()) != std::vector<std::string>{key})
      in.fail(std::string("expected '") + key + "'");
    in.next();
    std::vector<std::vector<int>> out;
    for (int r = 0; r < rows; ++r) out.push_back(int_row(in, cols));
    return out;
  };
  auto anm = block("actnm", N->order(), M->order());
  auto anl = block("actnl", N->order(), L->order());
  auto pfrows = block("peiffer", M->order(), M->order());
  std::vector<int> pf;
  for (const auto& row : pfrows)
    for (int v : row) {
      if (v < 0 || v >= L->order()) in.fail("peiffer entry out of range");
      pf.push_back(v);
    }
  try {
    TwoCrossedModule t{name,
                       L,
                       M,
                       N,
                       make_hom(L, M, d2),
                       make_hom(M, N, d1),
                       make_action(N, M, anm),
                       make_action(N, L, anl),
                       std::move(pf)};
    if (b.tcms.count(name)) in.fail("duplicate tcm '" + name + "'");
    b.tcms.emplace(name, t);
    b.tcm_order.push_back(name);
  } catch (const validation_error& e) {
    in.fail(std::string("invalid tcm: ") + e.what());
  }
}

void parse_cover(Lines& in, InputBundle& b, const std::vector<std::string>& hd) {
  if (hd.size() != 3) in.fail("expected: cover <name> <base_size>");
  in.next();
  const std::string name = hd[1];
  const int base = to_int(in, hd[2]);
  std::vector<std::vector<int>> patches;
  std::vector<std::pair<int, int>> adj;
  while (!in.eof()) {
    auto t = tokens(in.peek());
    if (t.empty()) {
      in.next();
      continue;
    }
    if (t[0] == "patch") {
      std::vector<int> pts;
      for (size_t i = 1; i < t.size(); ++i) pts.push_back(to_int(in, t[i]));
      if (pts.empty()) in.fail("empty patch");
      patches.push_back(pts);
      in.next();
    } else if (t[0] == "adjacency") {
      if (t.size() % 2 == 0) in.fail("adjacency needs pairs");
      for (size_t i = 1; i + 1 < t.size(); i += 2)
        adj.push_back({to_int(in, t[i]), to_int(in, t[i + 1])});
      in.next();
    } else {
      break;
    }
  }
  try {
    auto c = make_cover(name, base, patches, adj);
    if (b.covers.count(name)) in.fail("duplicate cover '" + name + "'");
    b.covers.emplace(name, c);
    b.cover_order.push_back(name);
  } catch (const validation_error& e) {
    in.fail(std::string("invalid cover: ") + e.what());
  }
}

void parse_cocycle(Lines& in, InputBundle& b,
                   const std::vector<std::string>& hd) {
  if (hd.size() != 4) in.fail("expected: cocycle <name> <cover> <group>");
  in.next();
  const std::string name = hd[1];
  auto cit = b.covers.find(hd[2]);
  if (cit == b.covers.end()) in.fail("unknown cover '" + hd[2] + "'");
  auto g = need_group(in, b, hd[3]);
  std::vector<std::array<int, 3>> values;
  while (!in.eof()) {
    auto t = tokens(in.peek());
    if (t.empty()) {
      in.next();
      continue;
    }
    if (t[0] != "over") break;
    if (t.size() != 4) in.fail("expected: over <x> <y> <g>");
    values.push_back({to_int(in, t[1]), to_int(in, t[2]), to_int(in, t[3])});
    in.next();
  }
  try {
    auto c = make_cocycle(name, cit->second, g, values);
    if (b.cocycles.count(name)) in.fail("duplicate cocycle '" + name + "'");
    b.cocycles.emplace(name, c);
    b.cocycle_order.push_back(name);
  } catch (const validation_error& e) {
    in.fail(std::string("invalid cocycle: ") + e.what());
  }
}

}  // namespace

void parse_text(InputBundle& into, const std::string& text,
                const std::string& filename) {
  Lines in;
  in.file = filename;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    in.lines.push_back(line);
  }
  while (!in.eof()) {
    auto t = tokens(in.peek());
    if (t.empty() || t[0].starts_with("#")) {
      in.next();
      continue;
    }
    if (t[0] == "group")
      parse_group(in, into, t);
    else if (t[0] == "xmod")
      parse_xmod(in, into, t);
    else if (t[0] == "tcm")
      parse_tcm(in, into, t);
    else if (t[0] == "cover")
      parse_cover(in, into, t);
    else if (t[0] == "cocycle")
      parse_cocycle(in, into, t);
    else
      in.fail("unknown block '" + t[0] + "'");
  }
}

void parse_file(InputBundle& into, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw parse_error(path, 0, "cannot open file");
  std::ostringstream ss;
  ss << f.rdbuf();
  parse_text(into, ss.str(), path);
}

namespace {

void write_rows(std::ostream& os, const std::vector<std::vector<int>>& rows) {
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << (i ? " " : "") << row[i];
    os << "\n";
  }
}

}  // namespace

std::string write_group(const FiniteGroup& g, const std::string& name) {
  std::ostringstream os;
  os << "group " << name << " " << g.order() << "\n";
  os << "table\n";
  write_rows(os, g.table());
  if (g.has_custom_labels()) {
    os << "labels";
    for (int i = 0; i < g.order(); ++i) os << " " << g.label(i);
    os << "\n";
  }
  return os.str();
}

std::string write_xmod(const CrossedModule& x, const std::string& name,
                       const std::string& h_name, const std::string& g_name) {
  std::ostringstream os;
  os << "xmod " << name << "\n";
  os << "H " << h_name << "\n";
  os << "G " << g_name << "\n";
  os << "t";
  for (int h = 0; h < x.H->order(); ++h) os << " " << x.t(h);
  os << "\nalpha\n";
  std::vector<std::vector<int>> rows(x.G->order(),
                                     std::vector<int>(x.H->order()));
  for (int g = 0; g < x.G->order(); ++g)
    for (int h = 0; h < x.H->order(); ++h) rows[g][h] = x.act(g, h);
  write_rows(os, rows);
  return os.str();
}

std::string write_tcm(const TwoCrossedModule& t, const std::string& name,
                      const std::string& l_name, const std::string& m_name,
                      const std::string& n_name) {
  std::ostringstream os;
  os << "tcm " << name << "\n";
  os << "L " << l_name << "\n";
  os << "M " << m_name << "\n";
  os << "N " << n_name << "\n";
  os << "d2";
  for (int l = 0; l < t.L->order(); ++l) os << " " << t.d2(l);
  os << "\nd1";
  for (int m = 0; m < t.M->order(); ++m) os << " " << t.d1(m);
  os << "\nactnm\n";
  std::vector<std::vector<int>> rows(t.N->order(),
                                     std::vector<int>(t.M->order()));
  for (int n = 0; n < t.N->order(); ++n)
    for (int m = 0; m < t.M->order(); ++m) rows[n][m] = t.actN_M(n, m);
  write_rows(os, rows);
  os << "actnl\n";
  rows.assign(t.N->order(), std::vector<int>(t.L->order()));
  for (int n = 0; n < t.N->order(); ++n)
    for (int l = 0; l < t.L->order(); ++l) rows[n][l] = t.actN_L(n, l);
  write_rows(os, rows);
  os << "peiffer\n";
  rows.assign(t.M->order(), std::vector<int>(t.M->order()));
  for (int m = 0; m < t.M->order(); ++m)
    for (int mp = 0; mp < t.M->order(); ++mp) rows[m][mp] = t.pf(m, mp);
  write_rows(os, rows);
  return os.str();
}

std::string write_cover(const FiniteCover& c, const std::string& name) {
  std::ostringstream os;
  os << "cover " << name << " " << c.base_size << "\n";
  for (const auto& p : c.patches) {
    os << "patch";
    for (int b : p) os << " " << b;
    os << "\n";
  }
  if (!c.adjacency.empty()) {
    os << "adjacency";
    for (const auto& [a, b] : c.adjacency) os << " " << a << " " << b;
    os << "\n";
  }
  return os.str();
}

std::string write_cocycle(const Cocycle& c, const std::string& name,
                          const std::string& cover_name,
                          const std::string& group_name) {
  std::ostringstream os;
  os << "cocycle " << name << " " << cover_name << " " << group_name << "\n";
  for (int x = 0; x < c.cover.n_points(); ++x)
    for (int y = x + 1; y < c.cover.n_points(); ++y)
      if (c.g[x][y] >= 0)
        os << "over " << x << " " << y << " " << c.g[x][y] << "\n";
  return os.str();
}

}  // namespace cgt
