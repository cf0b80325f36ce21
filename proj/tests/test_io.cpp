#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "cgt/io.hpp"
#include "cgt/tcm.hpp"

using namespace cgt;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("group round trip is bit exact") {
  for (auto g : {cyclic_group(2), cyclic_group(4), symmetric_3(),
                 dihedral_4()}) {
    auto text = write_group(*g, g->name());
    InputBundle b;
    parse_text(b, text);
    REQUIRE(b.groups.count(g->name()));
    auto back = b.groups.at(g->name());
    CHECK(back->order() == g->order());
    CHECK(back->table() == g->table());
    CHECK(write_group(*back, g->name()) == text);  // canonical fixed point
  }
}

TEST_CASE("xmod round trip is bit exact") {
  auto x = inn_crossed_module(symmetric_3());
  std::string text = write_group(*x.H, "s3") + write_xmod(x, "inns3", "s3", "s3");
  InputBundle b;
  parse_text(b, text);
  REQUIRE(b.xmods.count("inns3"));
  const auto& back = b.xmods.at("inns3");
  CHECK(back.t.map == x.t.map);
  CHECK(back.alpha.act == x.alpha.act);
  CHECK(write_group(*back.H, "s3") + write_xmod(back, "inns3", "s3", "s3") ==
        text);
}

TEST_CASE("tcm round trip is bit exact") {
  auto ext = extract_from_inn(incl_z2_z4());
  const auto& t = ext.tcm;
  std::string text = write_group(*t.L, "L") + write_group(*t.M, "M") +
                     write_group(*t.N, "N") + write_tcm(t, "t", "L", "M", "N");
  InputBundle b;
  parse_text(b, text);
  REQUIRE(b.tcms.count("t"));
  const auto& back = b.tcms.at("t");
  CHECK(back.d1.map == t.d1.map);
  CHECK(back.d2.map == t.d2.map);
  CHECK(back.peiffer == t.peiffer);
  CHECK(write_group(*back.L, "L") + write_group(*back.M, "M") +
            write_group(*back.N, "N") + write_tcm(back, "t", "L", "M", "N") ==
        text);
}

TEST_CASE("cover and cocycle round trip") {
  auto cover = make_cover("c3", 3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 1}, {1, 2}});
  auto z2 = cyclic_group(2);
  auto coc =
      make_cocycle("w", cover, z2, {{{1, 2, 1}}, {{3, 4, 0}}, {{5, 0, 0}}});
  std::string text = write_group(*z2, "Z2") + write_cover(cover, "c3") +
                     write_cocycle(coc, "w", "c3", "Z2");
  InputBundle b;
  parse_text(b, text);
  REQUIRE(b.covers.count("c3"));
  REQUIRE(b.cocycles.count("w"));
  CHECK(b.cocycles.at("w").g == coc.g);
  CHECK(write_group(*b.groups.at("Z2"), "Z2") +
            write_cover(b.covers.at("c3"), "c3") +
            write_cocycle(b.cocycles.at("w"), "w", "c3", "Z2") ==
        text);
}

TEST_CASE("parse errors carry positions") {
  InputBundle b;
  try {
    parse_text(b, "group g 2\ntable\n0 1\n1 oops\n", "str");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("str:4") != std::string::npos);
  }
  try {
    parse_text(b, "nonsense\n", "str");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.line() == 1);
  }
  try {
    parse_text(b, "xmod x\nH nosuch\n", "str");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("unknown group") != std::string::npos);
  }
}

TEST_CASE("invalid tables are rejected at parse time") {
  InputBundle b;
  CHECK_THROWS_AS(parse_text(b, "group g 2\ntable\n0 1\n1 1\n"), parse_error);
}

TEST_CASE("bundled data files parse") {
  InputBundle b;
  parse_file(b, std::string(CGT_DATA_DIR) + "/groups.grp");
  CHECK(b.groups.count("z2"));
  CHECK(b.groups.count("z4"));
  CHECK(b.groups.count("s3"));
  CHECK(b.groups.count("d4"));
  parse_file(b, std::string(CGT_DATA_DIR) + "/inn_s3.xm");
  CHECK(b.xmods.count("inn_s3"));
  parse_file(b, std::string(CGT_DATA_DIR) + "/z2_in_z4.xm");
  CHECK(b.xmods.count("z2_in_z4"));
  parse_file(b, std::string(CGT_DATA_DIR) + "/circle3.cov");
  CHECK(b.covers.count("circle3"));
  CHECK(b.cocycles.count("mobius"));
  CHECK(b.cocycles.count("trivial"));
  (void)slurp;
}
