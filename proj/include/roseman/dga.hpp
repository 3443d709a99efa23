#pragma once

#include "roseman/diagram.hpp"
#include "roseman/element.hpp"
#include "roseman/formula.hpp"

#include <map>
#include <string>
#include <vector>

namespace roseman {

struct Dga {
  std::string name;
  Variant variant;
  int sheets = 0;
  std::map<Generator, DgaElement> diff;  // the generator set is the key set
  int next_stab = 1;

  bool has(const Generator& g) const { return diff.count(g) != 0; }
  std::size_t size() const { return diff.size(); }
  int stab_degree(int index, int role) const;
};

class UnknownGenerator : public std::runtime_error {
public:
  explicit UnknownGenerator(const Generator& g)
      : std::runtime_error("unknown generator " + g.name()) {}
};

// Generator as an element of `dga`, with range checks against the diagram
// labels (a11(i,i) folds to 1+mu).
DgaElement make_generator(const Diagram& d, Kind k, int a = 0, int b = 0);

std::vector<Generator> diagram_generators(const Diagram& d);

Dga build_dga(const Diagram& d, Variant v, const TableSet& tables = TableSet::standard());

DgaElement boundary(const Dga& dga, const DgaElement& e);

struct D2Failure {
  Generator generator;
  DgaElement residue;
};
struct D2Report {
  std::vector<D2Failure> failures;
  std::vector<Generator> degree_errors;  // diff not homogeneous of degree deg-1
  bool ok() const { return failures.empty() && degree_errors.empty(); }
};
D2Report check_d_squared(const Dga& dga);

std::string dump_dga(const Dga& dga);
Dga parse_dga(const std::string& text);

}  // namespace roseman
