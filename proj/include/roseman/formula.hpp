#pragma once

#include "roseman/diagram.hpp"
#include "roseman/element.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace roseman {

// Differential tables are stored as text in a small formula notation:
//
//   [--] a31(p,i) = mu a21(tbm(p),i) + ... - a11(bmm(p),mm(p)) a21(tm(p),i) ...
//
// Juxtaposition multiplies (order kept), parentheses group, scalars are
// integers, mu, mu^k. Argument expressions are a variable (i sheet; x,y
// curve; p,q triple; k,l branch) or an accessor applied to one:
// o um up (curve -> sheet), t mp mm bpp bpm bmp bmm (triple -> sheet),
// tm mbp mbm tbp tbm (triple -> curve), dc (branch -> curve), sh (branch -> sheet).

struct Variant {
  bool eps_plus = false;
  bool delta_plus = false;
  std::string tag() const { return std::string(eps_plus ? "+" : "-") + (delta_plus ? "+" : "-"); }
  static Variant parse(const std::string& tag);
  static std::vector<Variant> all();
  friend bool operator==(const Variant&, const Variant&) = default;
  friend auto operator<=>(const Variant&, const Variant&) = default;
};

struct FormulaNode;

struct Formula {
  Kind kind;
  std::vector<char> vars;  // header variables, in argument order
  std::shared_ptr<const FormulaNode> body;
  std::string source;
};

struct Binding {
  int value[128] = {};
};

Formula parse_formula(const std::string& entry);
DgaElement evaluate(const Formula& f, const Binding& b, const Diagram& d);

class TableSet {
public:
  // The shipped tables.
  static const TableSet& standard();
  static TableSet from_text(const std::string& text);

  // Entry used for `kind` in variant `v`: the variant's own entry if it has
  // one, otherwise the shared (--) entry.
  const Formula& lookup(Variant v, Kind kind) const;
  bool has_own_entry(Variant v, Kind kind) const;

  // Replaces one entry, e.g. "[--] abb(k,l) = a2b(dc(k),l) - ab2(k,dc(l))".
  TableSet with_entry(const std::string& entry) const;

  std::string text() const;

private:
  std::map<std::pair<std::string, Kind>, Formula> entries_;
};

// Raw table text shipped with the library.
const std::string& standard_table_text();

}  // namespace roseman
