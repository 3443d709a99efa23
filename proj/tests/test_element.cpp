#include "random_helpers.hpp"
#include "roseman/element.hpp"

#include <doctest.h>

using namespace roseman;

namespace {

DgaElement g(Kind k, int a, int b = 0) { return make_generator(k, a, b); }

DgaElement random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 3), len(0, 3), pick(0, 3);
  const Generator pool[] = {make_gen(Kind::A11, 1, 2), make_gen(Kind::A11, 2, 1), make_gen(Kind::A21, 1, 2),
                            make_gen(Kind::A12, 3, 1)};
  DgaElement e;
  for (int t = terms(rng); t > 0; --t) {
    Word w;
    for (int l = len(rng); l > 0; --l) w.push_back(pool[pick(rng)]);
    e.add_term(w, testing::random_scalar(rng));
  }
  return e;
}

}  // namespace

TEST_CASE("generator construction folds the diagonal") {
  auto a = g(Kind::A11, 1, 2);
  REQUIRE(a.size() == 1);
  CHECK(a.terms().begin()->first == Word{make_gen(Kind::A11, 1, 2)});
  CHECK(a.terms().begin()->second == LaurentInt(1));
  CHECK(g(Kind::A11, 3, 3) == DgaElement(LaurentInt(1) + LaurentInt::mu()));
  CHECK(g(Kind::A21, 1, 2).degree() == 1);
}

TEST_CASE("products keep factor order") {
  auto x = g(Kind::A11, 1, 2), y = g(Kind::A11, 2, 1);
  auto xy = x * y;
  REQUIRE(xy.size() == 1);
  CHECK(xy.terms().begin()->first.size() == 2);
  CHECK(xy != y * x);
  CHECK((x + LaurentInt(-1) * x).is_zero());
  auto scaled = (LaurentInt(1) + LaurentInt::mu()) * g(Kind::A21, 1, 1);
  CHECK(scaled.linear_coefficient(make_gen(Kind::A21, 1, 1)) == LaurentInt(1) + LaurentInt::mu());
}

TEST_CASE("substitution") {
  auto gen = make_gen(Kind::A11, 1, 2), h = make_gen(Kind::A11, 2, 1);
  auto e = LaurentInt(3) * DgaElement::generator(gen) + LaurentInt::mu() * DgaElement::generator(h);
  CHECK(e.substitute(gen, DgaElement()) == LaurentInt::mu() * DgaElement::generator(h));
  auto x = DgaElement::generator(make_gen(Kind::A11, 1, 3));
  auto y = make_gen(Kind::A11, 3, 1);
  auto r = DgaElement::generator(gen) + LaurentInt(2);
  auto xyx = x * DgaElement::generator(y) * x;
  CHECK(xyx.substitute(y, -r) == -(x * r * x));
}

TEST_CASE("substitution reproduces the move-III change of variables") {
  // d a21(c0, i) = mu a11(2,i) + a11(0,i) - a11(2,1) a11(1,i) with sheets 0,1,2 as 4,1,2 and i = 3
  auto d = LaurentInt::mu() * g(Kind::A11, 2, 3) + g(Kind::A11, 4, 3) - g(Kind::A11, 2, 1) * g(Kind::A11, 1, 3);
  auto phi = g(Kind::A11, 4, 3) - LaurentInt::mu() * g(Kind::A11, 2, 3) + g(Kind::A11, 2, 1) * g(Kind::A11, 1, 3);
  CHECK(d.substitute(make_gen(Kind::A11, 4, 3), phi) == g(Kind::A11, 4, 3));
}

TEST_CASE("degrees") {
  CHECK(g(Kind::A21, 1, 1).degree() == 1);
  CHECK(DgaElement(LaurentInt(1) + LaurentInt::mu()).degree() == 0);
  CHECK_FALSE((g(Kind::A21, 1, 1) + g(Kind::A22, 1, 1)).degree().has_value());
  CHECK(degree_string(g(Kind::A21, 1, 1) + g(Kind::A22, 1, 1)) == "inhomogeneous");
  CHECK((g(Kind::A21, 1, 1) * g(Kind::A31, 1, 2)).degree() == 3);
}

TEST_CASE("element ring axioms and canonical form") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * DgaElement(1) == a);
    CHECK(DgaElement(1) * a == a);
    CHECK((a - a).is_zero());
    for (const auto& gen : {make_gen(Kind::A11, 1, 2), make_gen(Kind::A21, 1, 2)})
      CHECK(a.substitute(gen, DgaElement::generator(gen)) == a);
    auto ab = a * b;
    for (const auto& [w, coeff] : ab.terms()) {
      CHECK_FALSE(coeff.is_zero());
      for (const auto& f : w) CHECK_FALSE((f.kind == Kind::A11 && f.a == f.b));
    }
  }
}

TEST_CASE("element text round trip") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    auto a = random_element(rng);
    CHECK(parse_element(a.to_string()) == a);
  }
  CHECK(DgaElement().to_string() == "0");
  CHECK_THROWS(parse_element("(1 a11(s1,s2)"));
}
