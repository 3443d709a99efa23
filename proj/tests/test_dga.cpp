#include "random_helpers.hpp"
#include "roseman/dga.hpp"

#include <doctest.h>

using namespace roseman;

namespace {

DgaElement gen(Kind k, int a, int b = 0) { return DgaElement::generator(make_gen(k, a, b)); }

DgaElement random_word(const std::vector<Generator>& pool, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  DgaElement w(testing::random_scalar(rng));
  for (int l = len(rng); l > 0; --l) w = w * DgaElement::generator(pool[pick(rng)]);
  return w;
}

}  // namespace

TEST_CASE("the sphere has an empty algebra") {
  auto dga = build_dga(load_fixture("unknot_sphere"), Variant{});
  CHECK(dga.size() == 0);
  CHECK(check_d_squared(dga).ok());
}

TEST_CASE("double-curve generators on the spun trefoil") {
  auto d = load_fixture("spun_trefoil");
  auto dga = build_dga(d, Variant{});
  CHECK(dga.size() == 48);
  // c1: over s1, u+ s3, u- s2
  auto expect = LaurentInt::mu() * gen(Kind::A11, 2, 4) + gen(Kind::A11, 3, 4) -
                gen(Kind::A11, 2, 1) * gen(Kind::A11, 1, 4);
  CHECK(dga.diff.at(make_gen(Kind::A21, 1, 4)) == expect);
  auto diag = LaurentInt::mu() * make_generator(d, Kind::A11, 2, 2) + gen(Kind::A11, 3, 2) -
              gen(Kind::A11, 2, 1) * gen(Kind::A11, 1, 2);
  CHECK(dga.diff.at(make_gen(Kind::A21, 1, 2)) == diag);
  CHECK(dga.diff.at(make_gen(Kind::A11, 1, 2)).is_zero());
  CHECK(make_generator(d, Kind::A11, 3, 3) == DgaElement(LaurentInt(1) + LaurentInt::mu()));
  CHECK_THROWS(make_generator(d, Kind::A11, 5, 1));
  CHECK_THROWS(make_generator(d, Kind::A21, 4, 1));
}

TEST_CASE("branch generators") {
  auto dga = build_dga(load_fixture("context"), Variant{});
  CHECK(dga.diff.at(make_gen(Kind::Ab1, 1, 1)) == gen(Kind::A21, 6, 1));
  CHECK(dga.diff.at(make_gen(Kind::Ab2, 1, 6)) == gen(Kind::A22, 6, 6));
  CHECK(dga.diff.at(make_gen(Kind::Abb, 1, 1)) == gen(Kind::A2b, 6, 1) + gen(Kind::Ab2, 1, 6));
  CHECK(boundary(dga, gen(Kind::Ab1, 1, 1)) == gen(Kind::A21, 6, 1));
  CHECK(boundary(dga, gen(Kind::A11, 1, 2)).is_zero());
  CHECK(boundary(dga, DgaElement(LaurentInt(3))).is_zero());
  CHECK_THROWS_AS(boundary(dga, gen(Kind::A21, 9, 1)), UnknownGenerator);
}

TEST_CASE("a sign flip in the branch-pair entry is detected") {
  auto tables = TableSet::standard().with_entry("[--] abb(k,l) = a2b(dc(k),l) - ab2(k,dc(l))");
  for (auto v : Variant::all()) {
    auto report = check_d_squared(build_dga(load_fixture("context"), v, tables));
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].generator == make_gen(Kind::Abb, 1, 1));
    CHECK(report.failures[0].residue == LaurentInt(-2) * gen(Kind::A22, 6, 6));
  }
}

TEST_CASE("d squared vanishes on every fixture in every variant") {
  for (const auto& name : fixture_names()) {
    auto d = load_fixture(name);
    for (auto v : Variant::all()) {
      INFO(name << " " << v.tag());
      auto report = check_d_squared(build_dga(d, v));
      CHECK(report.failures.empty());
      CHECK(report.degree_errors.empty());
    }
  }
}

TEST_CASE("leibniz rule and grading on random words") {
  std::mt19937_64 rng(23);
  for (const char* name : {"context", "roseman_III_a", "spun_trefoil"}) {
    for (auto v : Variant::all()) {
      auto dga = build_dga(load_fixture(name), v);
      std::vector<Generator> pool;
      for (const auto& [g, dg] : dga.diff) pool.push_back(g);
      for (int i = 0; i < 200; ++i) {
        auto x = random_word(pool, rng), y = random_word(pool, rng);
        int dx = *x.degree();
        auto lhs = boundary(dga, x * y);
        auto rhs = boundary(dga, x) * y + LaurentInt(dx % 2 ? -1 : 1) * (x * boundary(dga, y));
        CHECK(lhs == rhs);
        auto bx = boundary(dga, x);
        if (!bx.is_zero()) CHECK(bx.degree() == dx - 1);
        CHECK(boundary(dga, bx).is_zero());
      }
    }
  }
}

TEST_CASE("only triple-point generators depend on the variant") {
  for (const char* name : {"context", "roseman_III_a", "roseman_VII_a"}) {
    auto d = load_fixture(name);
    auto base = build_dga(d, Variant{});
    for (auto v : Variant::all()) {
      auto other = build_dga(d, v);
      REQUIRE(other.size() == base.size());
      for (const auto& [g, dg] : base.diff) {
        bool touches_triple = is_triple_kind(g.kind);
        for (const auto& [w, c] : dg.terms())
          for (const auto& f : w) touches_triple = touches_triple || is_triple_kind(f.kind);
        if (!touches_triple) CHECK(other.diff.at(g) == dg);
      }
    }
  }
}

TEST_CASE("dump round trip") {
  for (const char* name : {"unknot", "context", "roseman_VI_a"}) {
    for (auto v : Variant::all()) {
      auto dga = build_dga(load_fixture(name), v);
      auto text = dump_dga(dga);
      auto back = parse_dga(text);
      CHECK(back.variant == v);
      CHECK(back.diff == dga.diff);
      CHECK(dump_dga(back) == text);
    }
  }
  CHECK_THROWS(parse_dga("dga x variant=-- sheets=1\nd a21(c1,s1) = (1) a11(s1,s2)\n"));
}
