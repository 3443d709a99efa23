#pragma once

#include "roseman/dga.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace roseman {

struct Presentation {
  std::string name;
  std::vector<Generator> generators;
  std::vector<DgaElement> relations;
};

// All generators; relations are the differentials of positive-degree generators.
Presentation characteristic_presentation(const Dga& dga);
// a11 generators modulo the differentials of the degree-1 generators.
Presentation hr0_presentation(const Dga& dga);

std::string dump_presentation(const Presentation& pres);
Presentation parse_presentation(const std::string& text);

struct MapCount {
  std::uint32_t p = 0;
  bool exact = true;
  BigInt total;          // exact count, or the part counted before the budget ran out
  int p_valuation = 0;   // of total (0 when total is 0)
  BigInt p_free_part;    // total / p^p_valuation
  std::uint64_t nodes = 0;
  double explored = 1.0;  // fraction of the search tree finished
  std::string report() const;
};

MapCount make_map_count(std::uint32_t p, BigInt total, bool exact = true);

constexpr std::uint64_t kDefaultBudget = 100000000;
// ROSEMAN_BUDGET when set and valid, otherwise kDefaultBudget.
std::uint64_t default_budget();

// Number of pairs (mu, assignment) with mu a unit of F_p and every generator
// sent to F_p such that all relations vanish, words read as commutative
// products.
MapCount count_algebra_maps(const Presentation& pres, std::uint32_t p,
                            std::uint64_t budget = default_budget());

constexpr std::uint64_t kBruteForceCap = 531441;  // 3^12 assignments
MapCount brute_force_count_maps(const Presentation& pres, std::uint32_t p,
                                std::uint64_t cap = kBruteForceCap);

struct Fingerprint {
  std::vector<MapCount> counts;
  // Equal when every prime agrees on the p-free part (and both are exact).
  bool matches(const Fingerprint& other) const;
  std::string report() const;
};

Fingerprint fingerprint(const Presentation& pres, const std::vector<std::uint32_t>& primes = {2, 3, 5},
                        std::uint64_t budget = default_budget());

}  // namespace roseman
