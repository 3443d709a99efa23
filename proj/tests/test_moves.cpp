#include "random_helpers.hpp"
#include "roseman/moves.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace roseman;

namespace {

DgaElement gen(Kind k, int a, int b = 0) { return DgaElement::generator(make_gen(k, a, b)); }

MoveScript script_file(const std::string& stem) {
  std::ifstream in(fixture_dir() + "/" + stem + ".mvs");
  std::stringstream buf;
  buf << in.rdbuf();
  return MoveScript::parse(buf.str());
}

const char* kMoves[] = {"I", "III", "IIIrev", "IV", "V", "VI", "VIneg", "VIover", "VIoverneg", "VII"};

}  // namespace

TEST_CASE("elementary isomorphisms") {
  for (auto v : Variant::all()) {
    auto dga = build_dga(load_fixture("context"), v);
    ElementaryIso id{make_gen(Kind::A21, 1, 2), LaurentInt(1), DgaElement()};
    CHECK(apply_elementary_iso(dga, id).diff == dga.diff);

    ElementaryIso phi{make_gen(Kind::A11, 1, 2), LaurentInt::mu(-1),
                      gen(Kind::A11, 1, 3) * gen(Kind::A11, 3, 2) + LaurentInt(2)};
    auto moved = apply_elementary_iso(dga, phi);
    CHECK(check_d_squared(moved).ok());
    CHECK(moved.diff != dga.diff);
    CHECK(apply_elementary_iso(moved, inverse(phi)).diff == dga.diff);

    ElementaryIso bad_degree{make_gen(Kind::A21, 1, 2), LaurentInt(1), gen(Kind::A11, 1, 2)};
    CHECK_THROWS_AS(apply_elementary_iso(dga, bad_degree), MoveError);
    ElementaryIso not_unit{make_gen(Kind::A11, 1, 2), LaurentInt(2), DgaElement()};
    CHECK_THROWS_AS(apply_elementary_iso(dga, not_unit), MoveError);
  }
}

TEST_CASE("stabilization followed by cancellation") {
  auto dga = build_dga(load_fixture("context"), Variant{});
  auto s = stabilize(dga, 2);
  REQUIRE(s.size() == dga.size() + 2);
  auto e1 = make_stab(1, 1, 3), e2 = make_stab(1, 2, 2);
  CHECK(s.diff.at(e1) == DgaElement::generator(e2));
  CHECK(s.diff.at(e2).is_zero());
  CHECK(check_d_squared(s).ok());
  Cancellation rec;
  auto back = cancel_pair(s, e1, e2, &rec);
  CHECK(back.diff == dga.diff);
  CHECK(rec.c == LaurentInt(1));
  CHECK_FALSE(rec.trace_line().empty());
  CHECK(stabilize(s, 0).has(make_stab(2, 1, 1)));
}

TEST_CASE("cancellation shape") {
  auto dga = build_dga(load_fixture("roseman_III_b"), Variant{});
  auto mu_pair = cancellation_shape(dga, make_gen(Kind::A21, 1, 2), make_gen(Kind::A11, 3, 2));
  REQUIRE(mu_pair.has_value());
  CHECK(mu_pair->c == LaurentInt::mu());
  CHECK_FALSE(cancellation_shape(dga, make_gen(Kind::A11, 1, 2), make_gen(Kind::A11, 2, 1)).has_value());
  CHECK_THROWS_AS(cancel_pair(dga, make_gen(Kind::A22, 1, 2), make_gen(Kind::A11, 1, 2)), MoveError);
  int found = 0;
  for (const auto& [x, dx] : dga.diff)
    for (const auto& [w, c] : dx.terms())
      if (w.size() == 1 && c.is_unit()) {
        auto shape = cancellation_shape(dga, x, w[0]);
        if (!shape) continue;
        ++found;
        auto reduced = cancel_pair(dga, x, w[0]);
        CHECK(reduced.size() == dga.size() - 2);
        CHECK(check_d_squared(reduced).ok());
        if (found >= 5) break;
      }
  CHECK(found >= 1);
}

TEST_CASE("labels and relabeling") {
  CHECK(parse_label("curve:c3").space == Space::Curve);
  CHECK(parse_label("branch:b2").id == 2);
  CHECK(parse_label("triple:t1").to_string() == "triple:t1");
  CHECK_THROWS(parse_label("curve:s3"));
  CHECK_THROWS(parse_label("edge:e1"));

  auto dga = build_dga(load_fixture("context"), Variant{});
  auto swap = Relabel::parse({"s2=s3", "s3=s2"});
  CHECK(swap.apply(make_gen(Kind::A11, 2, 3)) == make_gen(Kind::A11, 3, 2));
  auto twice = relabel(relabel(dga, swap), swap);
  CHECK(twice.diff == dga.diff);
  CHECK(dga_equal_up_to_relabel(dga, relabel(dga, swap), swap).equal);
  auto c = dga_equal_up_to_relabel(dga, relabel(dga, swap));
  CHECK_FALSE(c.equal);
  CHECK_FALSE(c.discrepancy.empty());
}

TEST_CASE("move scripts parse and report errors") {
  auto s = MoveScript::parse("# comment\ndestab curve:c7 -> sheet:s9\nstab 2\n\nrelabel s1=s2 s2=s1\n"
                             "cancel a21(c1,s2) a11(s3,s2)\n");
  REQUIRE(s.steps.size() == 4);
  CHECK(s.steps[0].type == ScriptStep::Type::Destab);
  CHECK(s.steps[0].line == 2);
  CHECK(s.steps[1].type == ScriptStep::Type::Stab);
  CHECK(s.steps[1].degree == 2);
  CHECK(s.steps[2].type == ScriptStep::Type::Relabel);
  CHECK(s.steps[3].type == ScriptStep::Type::Cancel);
  CHECK_THROWS(MoveScript::parse("destab curve:c7 sheet:s9\n"));
  CHECK_THROWS(MoveScript::parse("twist curve:c7\n"));
  CHECK_THROWS(MoveScript::parse("stab x\n"));

  auto dga = build_dga(load_fixture("context"), Variant{});
  try {
    run_move_script(dga, MoveScript::parse("stab 1\ndestab curve:c9 -> sheet:s1\n"));
    FAIL("expected a script error");
  } catch (const ScriptError& e) {
    CHECK_FALSE(e.trace.empty());
  }
}

TEST_CASE("move pairs agree after their scripts in every variant") {
  for (const char* move : kMoves) {
    std::string a = std::string("roseman_") + move + "_a", b = std::string("roseman_") + move + "_b";
    for (auto v : Variant::all()) {
      INFO(move << " " << v.tag());
      auto ra = run_move_script(build_dga(load_fixture(a), v), script_file(a));
      auto rb = run_move_script(build_dga(load_fixture(b), v), script_file(b));
      auto c = dga_equal_up_to_relabel(ra.dga, rb.dga);
      CHECK_MESSAGE(c.equal, c.discrepancy);
      CHECK(check_d_squared(ra.dga).ok());
    }
  }
}

TEST_CASE("destabilization does not depend on the cancellation order") {
  for (const char* move : {"III", "IV", "VI"}) {
    std::string b = std::string("roseman_") + move + "_b";
    auto dga = build_dga(load_fixture(b), Variant{true, false});
    auto script = script_file(b);
    auto least = run_move_script(dga, script).dga;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      INFO(move << " seed " << seed);
      auto shuffled = run_move_script(dga, script, DestabOptions{seed, true}).dga;
      CHECK(dga_equal_up_to_relabel(shuffled, least).equal);
    }
  }
}
