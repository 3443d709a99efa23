#include "random_helpers.hpp"
#include "roseman/invariants.hpp"
#include "roseman/moves.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>

using namespace roseman;

namespace {

Presentation two_gen(const DgaElement& rel) {
  Presentation pres;
  pres.generators = {make_gen(Kind::A11, 1, 2), make_gen(Kind::A11, 2, 1)};
  pres.relations = {rel};
  return pres;
}

DgaElement gen(int i, int j) { return DgaElement::generator(make_gen(Kind::A11, i, j)); }

}  // namespace

TEST_CASE("empty presentation counts the units of F_p") {
  Presentation pres;
  CHECK(count_algebra_maps(pres, 3).total == 2);
  CHECK(brute_force_count_maps(pres, 3).total == 2);
  CHECK(count_algebra_maps(pres, 5).total == 4);
}

TEST_CASE("single relation a forces a = 0") {
  Presentation pres;
  pres.generators = {make_gen(Kind::A11, 1, 2)};
  pres.relations = {gen(1, 2)};
  CHECK(count_algebra_maps(pres, 3).total == 2);
  CHECK(brute_force_count_maps(pres, 3).total == 2);
}

TEST_CASE("mu a + b leaves a free and determines b") {
  auto pres = two_gen(LaurentInt::mu() * gen(1, 2) + gen(2, 1));
  CHECK(count_algebra_maps(pres, 3).total == 6);
  CHECK(brute_force_count_maps(pres, 3).total == 6);
}

TEST_CASE("nonlinear relation ab - 1") {
  auto pres = two_gen(gen(1, 2) * gen(2, 1) - DgaElement(1));
  // a unit, b its inverse: (p - 1) choices times (p - 1) values of mu
  CHECK(count_algebra_maps(pres, 5).total == 16);
  CHECK(brute_force_count_maps(pres, 5).total == 16);
}

TEST_CASE("exponents reduce by Fermat") {
  auto a = gen(1, 2);
  auto pres = two_gen(a * a * a - a);  // a^3 = a holds for every a in F_3
  CHECK(count_algebra_maps(pres, 3).total == 2 * 9);
  CHECK(count_algebra_maps(pres, 2).total == 4);
}

TEST_CASE("inconsistent constant relation") {
  auto pres = two_gen(DgaElement(LaurentInt::mu() - LaurentInt(1)));
  // mu = 1 is the only unit satisfying the relation
  CHECK(count_algebra_maps(pres, 5).total == 25);
  CHECK(brute_force_count_maps(pres, 5).total == 25);
}

TEST_CASE("p_free part and valuation") {
  auto m = make_map_count(3, BigInt(19684) * 9);
  CHECK(m.p_valuation == 2);
  CHECK(m.p_free_part == 19684);
  auto z = make_map_count(3, 0);
  CHECK(z.p_valuation == 0);
  CHECK(z.p_free_part == 0);
  CHECK(m.report() == "count p=3 total=177156 v_p=2 pfree=19684");
}

TEST_CASE("errors") {
  Presentation pres;
  CHECK_THROWS_AS(count_algebra_maps(pres, 4), std::invalid_argument);
  CHECK_THROWS_AS(count_algebra_maps(pres, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_count_maps(pres, 9), std::invalid_argument);
  for (int i = 0; i < 12; ++i) pres.generators.push_back(make_gen(Kind::A11, 1, i + 2));
  CHECK_THROWS_AS(brute_force_count_maps(pres, 3), std::invalid_argument);
  Presentation bad;
  bad.relations = {gen(1, 2)};
  CHECK_THROWS_AS(count_algebra_maps(bad, 3), std::invalid_argument);
}

TEST_CASE("budget exhaustion is reported as partial") {
  Presentation pres;
  DgaElement rel;
  for (int i = 0; i < 8; ++i) {
    pres.generators.push_back(make_gen(Kind::A11, 1, i + 2));
    pres.generators.push_back(make_gen(Kind::A11, 2, i + 3));
    rel += gen(1, i + 2) * gen(2, i + 3) * gen(1, i + 2);
  }
  pres.relations = {rel - DgaElement(1)};
  auto m = count_algebra_maps(pres, 3, 5);
  CHECK_FALSE(m.exact);
  CHECK(m.explored >= 0.0);
  CHECK(m.explored < 1.0);
  CHECK(m.report().find("partial") != std::string::npos);
  auto full = count_algebra_maps(pres, 3);
  CHECK(full.exact);
}

TEST_CASE("ROSEMAN_BUDGET overrides the default budget") {
  ::setenv("ROSEMAN_BUDGET", "1234", 1);
  CHECK(default_budget() == 1234);
  ::setenv("ROSEMAN_BUDGET", "junk", 1);
  CHECK(default_budget() == kDefaultBudget);
  ::unsetenv("ROSEMAN_BUDGET");
  CHECK(default_budget() == kDefaultBudget);
}

TEST_CASE("solver agrees with brute force on random presentations") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto pres = testing::random_presentation(rng);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      BigInt cases = p - 1;
      for (std::size_t i = 0; i < pres.generators.size(); ++i) cases *= p;
      if (cases > kBruteForceCap) continue;
      auto fast = count_algebra_maps(pres, p);
      auto slow = brute_force_count_maps(pres, p);
      INFO(dump_presentation(pres), " p=", p);
      REQUIRE(fast.exact);
      CHECK(fast.total == slow.total);
    }
  }
}

TEST_CASE("presentation dump round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto pres = testing::random_presentation(rng);
    auto text = dump_presentation(pres);
    auto back = parse_presentation(text);
    CHECK(dump_presentation(back) == text);
  }
  CHECK_THROWS_AS(parse_presentation("bogus\n"), std::invalid_argument);
}

TEST_CASE("fingerprints compare p-free parts") {
  auto pres = two_gen(LaurentInt::mu() * gen(1, 2) + gen(2, 1));
  auto a = fingerprint(pres);
  auto b = fingerprint(pres);
  CHECK(a.matches(b));
  REQUIRE(a.counts.size() == 3);
  auto other = two_gen(gen(1, 2) * gen(2, 1) - DgaElement(1));
  CHECK_FALSE(a.matches(fingerprint(other)));
}

TEST_CASE("presentation sizes") {
  auto dga = build_dga(load_fixture("spun_trefoil"), Variant{});
  auto full = characteristic_presentation(dga);
  CHECK(full.generators.size() == dga.size());
  std::size_t positive = 0, degree_one = 0, a11 = 0;
  for (const auto& [g, dg] : dga.diff) {
    positive += g.degree() > 0;
    degree_one += g.degree() == 1;
    a11 += g.kind == Kind::A11;
  }
  CHECK(full.relations.size() == positive);
  auto h = hr0_presentation(dga);
  CHECK(h.generators.size() == a11);
  CHECK(h.relations.size() == degree_one);
  for (const auto& g : h.generators) CHECK(g.kind == Kind::A11);
}

TEST_CASE("degree-0 relation of a double curve") {
  auto dga = build_dga(load_fixture("roseman_III_b"), Variant{});
  auto h = hr0_presentation(dga);
  auto rel = dga.diff.at(make_gen(Kind::A21, 1, 4));
  CHECK(std::find(h.relations.begin(), h.relations.end(), rel) != h.relations.end());
}

TEST_CASE("degree-0 presentation ignores the variant and the triple points") {
  for (const char* name : {"context", "roseman_V_a", "roseman_VII_b"}) {
    auto d = load_fixture(name);
    auto base = dump_presentation(hr0_presentation(build_dga(d, Variant{})));
    for (auto v : Variant::all()) CHECK(dump_presentation(hr0_presentation(build_dga(d, v))) == base);
  }
}

TEST_CASE("stabilization multiplies the count by p") {
  auto dga = build_dga(load_fixture("roseman_I_a"), Variant{});
  auto base = count_algebra_maps(characteristic_presentation(dga), 3);
  REQUIRE(base.exact);
  for (int degree : {0, 1, 2}) {
    auto stabbed = count_algebra_maps(characteristic_presentation(stabilize(dga, degree)), 3);
    REQUIRE(stabbed.exact);
    CHECK(stabbed.total == base.total * 3);
    CHECK(stabbed.p_free_part == base.p_free_part);
  }
  CHECK(count_algebra_maps(hr0_presentation(stabilize(dga, 0)), 3).total ==
        count_algebra_maps(hr0_presentation(dga), 3).total);
}

TEST_CASE("p-free part survives each cancellation step") {
  for (const char* name : {"roseman_III_b", "roseman_VI_b"}) {
    auto dga = build_dga(load_fixture(name), Variant{false, true});
    auto before = count_algebra_maps(hr0_presentation(dga), 3);
    REQUIRE(before.exact);
    std::vector<Cancellation> trace;
    Dga cur = dga;
    for (int step = 0; step < 4; ++step) {
      std::optional<Cancellation> pick;
      for (const auto& [x, dx] : cur.diff) {
        if (x.degree() != 1) continue;
        for (const auto& [w, c] : dx.terms())
          if (w.size() == 1 && (pick = cancellation_shape(cur, x, w[0]))) break;
        if (pick) break;
      }
      if (!pick) break;
      cur = cancel_pair(cur, pick->x, pick->y);
      auto after = count_algebra_maps(hr0_presentation(cur), 3);
      REQUIRE(after.exact);
      CHECK(after.p_free_part == before.p_free_part);
    }
  }
}
