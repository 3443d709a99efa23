#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace roseman {

struct DoubleCurve {
  int id = 0;
  int over = 0;
  int u_plus = 0;
  int u_minus = 0;
  friend bool operator==(const DoubleCurve&, const DoubleCurve&) = default;
};

// Bottom sheets are indexed by (side of top, side of middle):
// b[0] = ++, b[1] = +-, b[2] = -+, b[3] = --.
struct TriplePoint {
  int id = 0;
  int t = 0;
  int m_plus = 0;
  int m_minus = 0;
  int b[4] = {0, 0, 0, 0};
  int tm = 0;
  int mb_plus = 0;
  int mb_minus = 0;
  int tb_plus = 0;
  int tb_minus = 0;

  int bottom(bool top_plus, bool middle_plus) const {
    return b[(top_plus ? 0 : 2) + (middle_plus ? 0 : 1)];
  }
  friend bool operator==(const TriplePoint& x, const TriplePoint& y) {
    return x.id == y.id && x.t == y.t && x.m_plus == y.m_plus && x.m_minus == y.m_minus &&
           std::equal(x.b, x.b + 4, y.b) && x.tm == y.tm && x.mb_plus == y.mb_plus &&
           x.mb_minus == y.mb_minus && x.tb_plus == y.tb_plus && x.tb_minus == y.tb_minus;
  }
};

struct BranchPoint {
  int id = 0;
  bool positive = true;
  int curve = 0;
  int sheet = 0;
  friend bool operator==(const BranchPoint&, const BranchPoint&) = default;
};

// Labels are dense: sheets 1..sheets, curves[j-1].id == j, and likewise for
// triple points and branch points (both signs share the branch namespace).
struct Diagram {
  std::string name;
  int sheets = 0;
  std::vector<DoubleCurve> curves;
  std::vector<TriplePoint> triples;
  std::vector<BranchPoint> branches;

  const DoubleCurve& curve(int id) const { return curves.at(static_cast<std::size_t>(id - 1)); }
  const TriplePoint& triple(int id) const { return triples.at(static_cast<std::size_t>(id - 1)); }
  const BranchPoint& branch(int id) const { return branches.at(static_cast<std::size_t>(id - 1)); }
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

class DiagramError : public std::runtime_error {
public:
  DiagramError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

Diagram parse_diagram(const std::string& text);
std::string serialize_diagram(const Diagram& d);

struct Violation {
  std::string rule;
  std::string detail;
};
std::vector<Violation> validate_diagram(const Diagram& d);

Diagram read_diagram_file(const std::string& path);

// Directory holding the shipped .skd/.mvs files.
std::string fixture_dir();
// Stems of the .skd files in fixture_dir(), sorted.
std::vector<std::string> fixture_names();
// Accepts file stems and the long names unknot_sphere, spun_trefoil and
// twist2_spun_trefoil.
Diagram load_fixture(const std::string& name);

}  // namespace roseman
