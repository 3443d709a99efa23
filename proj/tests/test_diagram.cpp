#include "roseman/diagram.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace roseman;

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool has_rule(const std::vector<Violation>& vs, const std::string& rule) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.rule == rule; });
}

const char* kTriple =
    "diagram tp\nsheets 7\n"
    "curve c1 over=s1 uplus=s2 uminus=s3\n"
    "curve c2 over=s2 uplus=s4 uminus=s5\n"
    "curve c3 over=s3 uplus=s6 uminus=s7\n"
    "curve c4 over=s1 uplus=s4 uminus=s6\n"
    "curve c5 over=s1 uplus=s5 uminus=s7\n"
    "triple t1 t=s1 mplus=s2 mminus=s3 bpp=s4 bpm=s5 bmp=s6 bmm=s7 tm=c1 mbplus=c2 mbminus=c3 "
    "tbplus=c4 tbminus=c5\n";

}  // namespace

TEST_CASE("parse the one-sheet sphere") {
  auto d = parse_diagram("diagram unknot\nsheets 1\n");
  CHECK(d.name == "unknot");
  CHECK(d.sheets == 1);
  CHECK(d.curves.empty());
  CHECK(d.triples.empty());
  CHECK(d.branches.empty());
  CHECK(serialize_diagram(d) == "diagram unknot\nsheets 1\n");
  CHECK(validate_diagram(d).empty());
}

TEST_CASE("comments are dropped and fields are read") {
  auto d = parse_diagram("# header\ndiagram x  # trailing\nsheets 3\ncurve c1 over=s1 uplus=s3 uminus=s2\n");
  REQUIRE(d.curves.size() == 1);
  CHECK(d.curve(1).over == 1);
  CHECK(d.curve(1).u_plus == 3);
  CHECK(d.curve(1).u_minus == 2);
  CHECK(serialize_diagram(d).find('#') == std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
  std::string dangling = kTriple;
  dangling.replace(dangling.find("tm=c1"), 5, "tm=c9");
  try {
    parse_diagram(dangling);
    FAIL("expected a dangling reference error");
  } catch (const DiagramError& e) {
    CHECK(e.line() == 8);
    CHECK(std::string(e.what()).find("dangling") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_diagram("diagram a\nsheets 2\ncurve c1 over=s1 uplus=s2 uminus=s2\n"
                                "curve c1 over=s1 uplus=s2 uminus=s2\n"),
                  DiagramError);
  CHECK_THROWS_AS(parse_diagram("diagram a\nsheets 2\ncurve c2 over=s1 uplus=s2 uminus=s2\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("sheets 2\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("diagram a\nsheets 2\nblob\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("diagram a\nsheets 2\ncurve c1 over=s1 uplus=s2\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("diagram a\nsheets 1\nbranch b1 sign=x curve=c1 sheet=s1\n"), DiagramError);
}

TEST_CASE("validation rules") {
  CHECK(validate_diagram(parse_diagram(kTriple)).empty());

  std::string bad_tm = kTriple;
  bad_tm.replace(bad_tm.find("curve c1 over=s1"), 16, "curve c1 over=s2");
  CHECK(has_rule(validate_diagram(parse_diagram(bad_tm)), "triple incidence tm"));

  auto branch = parse_diagram("diagram b\nsheets 2\ncurve c1 over=s1 uplus=s1 uminus=s1\n"
                              "branch b1 sign=+ curve=c1 sheet=s2\n");
  CHECK(has_rule(validate_diagram(branch), "branch-curve identity"));

  std::string thrice = kTriple;
  thrice.replace(thrice.find("tbplus=c4"), 9, "tbplus=c1");
  thrice.replace(thrice.find("tbminus=c5"), 10, "tbminus=c1");
  CHECK(has_rule(validate_diagram(parse_diagram(thrice)), "triple curve ends"));
}

TEST_CASE("every shipped fixture is valid and round-trips") {
  auto names = fixture_names();
  CHECK(names.size() >= 20);
  for (const auto& name : names) {
    INFO(name);
    auto d = load_fixture(name);
    CHECK(validate_diagram(d).empty());
    auto text = serialize_diagram(d);
    CHECK(parse_diagram(text) == d);
    CHECK(serialize_diagram(parse_diagram(text)) == text);
  }
}

TEST_CASE("fixture names and aliases") {
  auto sphere = load_fixture("unknot_sphere");
  CHECK(sphere.sheets == 1);
  CHECK(sphere.curves.empty());
  CHECK(load_fixture("unknot") == sphere);
  auto spun = load_fixture("spun_trefoil");
  CHECK(spun.triples.empty());
  CHECK(spun.branches.empty());
  CHECK(spun.curves.size() == 3);
  auto twisted = load_fixture("twist2_spun_trefoil");
  CHECK_FALSE(twisted.triples.empty());
  CHECK_FALSE(twisted.branches.empty());
  CHECK_THROWS_AS(load_fixture("no_such_fixture"), std::invalid_argument);
  CHECK(read_diagram_file(fixture_dir() + "/unknot.skd") == sphere);
  CHECK(read_text(fixture_dir() + "/roseman_III_b.mvs").find("destab") != std::string::npos);
}

TEST_CASE("move pairs differ by the move-local labels only") {
  for (const char* move : {"I", "III", "IV", "V", "VI", "VIneg", "VII"}) {
    INFO(move);
    auto a = load_fixture(std::string("roseman_") + move + "_a");
    auto b = load_fixture(std::string("roseman_") + move + "_b");
    auto context = load_fixture("context");
    for (std::size_t i = 0; i < context.curves.size(); ++i) {
      CHECK(a.curves.at(i) == context.curves[i]);
      CHECK(b.curves.at(i) == context.curves[i]);
    }
    CHECK(a.triples.at(0) == context.triples[0]);
    CHECK(b.triples.at(0) == context.triples[0]);
  }
}
