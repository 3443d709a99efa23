#pragma once

#include "roseman/dga.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace roseman {

// phi(target) = unit * target + tail, identity on every other generator.
struct ElementaryIso {
  Generator target;
  LaurentInt unit = 1;
  DgaElement tail;
};

class MoveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Differential conjugated by the iso: d' = phi . d . phi^-1.
Dga apply_elementary_iso(const Dga& dga, const ElementaryIso& iso);
ElementaryIso inverse(const ElementaryIso& iso);

// Adds e1 (degree i+1) and e2 (degree i) with d e1 = e2, d e2 = 0.
Dga stabilize(const Dga& dga, int degree);

struct Cancellation {
  Generator x;
  Generator y;
  LaurentInt c;
  DgaElement r;
  std::string trace_line() const;
};

// Requires d x = c y + r, c a unit, y not in r, deg x = deg y + 1. Removes x
// and y; elsewhere x -> 0 and y -> -c^-1 r.
Dga cancel_pair(const Dga& dga, const Generator& x, const Generator& y,
                Cancellation* record = nullptr);

// Shape test used by cancel_pair; nullopt when (x, y) is not cancellable.
std::optional<Cancellation> cancellation_shape(const Dga& dga, const Generator& x,
                                               const Generator& y);

struct Label {
  Space space = Space::None;
  int id = 0;
  std::string to_string() const;
  friend auto operator<=>(const Label&, const Label&) = default;
};

// "curve:c3", "sheet:s4", "triple:t1", "branch:b2".
Label parse_label(const std::string& text);

struct DestabOptions {
  std::optional<std::uint64_t> seed;  // random choice among candidates instead of least
  bool strict = false;                // re-check d^2 = 0 after every cancellation
};

Dga destabilize_along(const Dga& dga, const Label& higher, const Label& lower,
                      std::vector<Cancellation>* trace = nullptr,
                      const DestabOptions& options = {});

// Simultaneous label substitution; labels not listed map to themselves.
struct Relabel {
  std::map<std::pair<Space, int>, int> map;
  int apply(Space s, int v) const;
  Generator apply(const Generator& g) const;
  static Relabel parse(const std::vector<std::string>& tokens);
};

Dga relabel(const Dga& dga, const Relabel& map);

struct ScriptStep {
  enum class Type { Destab, Cancel, Stab, Relabel } type;
  Label higher, lower;
  std::string x, y;
  int degree = 0;
  Relabel relabel;
  int line = 0;
};

struct MoveScript {
  std::vector<ScriptStep> steps;
  static MoveScript parse(const std::string& text);
};

struct ScriptResult {
  Dga dga;
  std::vector<std::string> trace;
};

class ScriptError : public std::runtime_error {
public:
  ScriptError(const std::string& msg, std::vector<std::string> trace)
      : std::runtime_error(msg), trace(std::move(trace)) {}
  std::vector<std::string> trace;
};

ScriptResult run_move_script(const Dga& dga, const MoveScript& script,
                             const DestabOptions& options = {});

struct Comparison {
  bool equal = false;
  std::string discrepancy;
};

// Relabels `a` by `map` and compares generator sets and differentials with `b`.
Comparison dga_equal_up_to_relabel(const Dga& a, const Dga& b, const Relabel& map = {});

}  // namespace roseman
