#pragma once

#include "roseman/dga.hpp"
#include "roseman/invariants.hpp"

#include <random>
#include <vector>

namespace roseman::testing {

inline LaurentInt random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-2, 2), expo(-2, 2), count(1, 2);
  LaurentInt s;
  for (int k = count(rng); k > 0; --k) s += LaurentInt::monomial(coeff(rng), expo(rng));
  return s;
}

// Presentation over distinct a11 generators with random words.
inline Presentation random_presentation(std::mt19937_64& rng, int max_gens = 6, int max_rels = 4) {
  Presentation pres;
  pres.name = "random";
  std::uniform_int_distribution<int> ngens(0, max_gens), nrels(0, max_rels), nterms(1, 4), len(0, 3);
  int n = ngens(rng);
  for (int i = 0; i < n; ++i) pres.generators.push_back(make_gen(Kind::A11, 1, i + 2));
  for (int r = nrels(rng); r > 0; --r) {
    DgaElement rel;
    for (int t = nterms(rng); t > 0; --t) {
      Word w;
      if (n > 0) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int l = len(rng); l > 0; --l) w.push_back(pres.generators[pick(rng)]);
      }
      rel.add_term(w, random_scalar(rng));
    }
    pres.relations.push_back(rel);
  }
  return pres;
}

}  // namespace roseman::testing
