#include "roseman/moves.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace roseman {

namespace {

Dga with_same_header(const Dga& dga) {
  Dga out;
  out.name = dga.name;
  out.variant = dga.variant;
  out.sheets = dga.sheets;
  out.next_stab = dga.next_stab;
  return out;
}

void require_d2(const Dga& dga, const std::string& where) {
  auto report = check_d_squared(dga);
  if (!report.ok()) {
    std::string msg = "strict mode: d^2 != 0 after " + where;
    if (!report.failures.empty()) msg += " at " + report.failures[0].generator.name();
    else msg += " (degree error at " + report.degree_errors[0].name() + ")";
    throw MoveError(msg);
  }
}

std::function<int(int, int)> stab_lookup(const Dga& dga) {
  return [&dga](int idx, int role) { return dga.stab_degree(idx, role); };
}

}  // namespace

Dga apply_elementary_iso(const Dga& dga, const ElementaryIso& iso) {
  if (!dga.has(iso.target)) throw MoveError("iso target " + iso.target.name() + " not in dga");
  if (!iso.unit.is_unit()) throw MoveError("iso coefficient " + iso.unit.to_string() + " is not a unit");
  if (iso.tail.contains(iso.target)) throw MoveError("iso tail contains the target");
  if (!iso.tail.is_zero()) {
    auto d = iso.tail.degree();
    if (!d || *d != iso.target.degree()) throw MoveError("iso tail degree mismatch");
  }
  DgaElement image = iso.unit * DgaElement::generator(iso.target) + iso.tail;
  auto phi = [&](const Generator& g) -> const DgaElement* {
    return g == iso.target ? &image : nullptr;
  };
  Dga out = with_same_header(dga);
  for (const auto& [g, dg] : dga.diff)
    if (g != iso.target) out.diff.emplace(g, dg.substitute(phi));
  out.diff.emplace(iso.target, DgaElement{});
  // d' target = unit^-1 (phi(d target) - d'(tail)); tail is target-free.
  DgaElement rest = dga.diff.at(iso.target).substitute(phi) - boundary(out, iso.tail);
  out.diff[iso.target] = iso.unit.unit_inverse() * rest;
  return out;
}

ElementaryIso inverse(const ElementaryIso& iso) {
  LaurentInt inv = iso.unit.unit_inverse();
  return {iso.target, inv, -(inv * iso.tail)};
}

Dga stabilize(const Dga& dga, int degree) {
  Dga out = dga;
  int idx = out.next_stab++;
  Generator e1 = make_stab(idx, 1, degree + 1);
  Generator e2 = make_stab(idx, 2, degree);
  out.diff.emplace(e1, DgaElement::generator(e2));
  out.diff.emplace(e2, DgaElement{});
  return out;
}

std::string Cancellation::trace_line() const {
  return "cancel x=" + x.name() + " y=" + y.name() + " c=" + c.to_string() + " r=" + r.to_string();
}

std::optional<Cancellation> cancellation_shape(const Dga& dga, const Generator& x,
                                               const Generator& y) {
  auto it = dga.diff.find(x);
  if (it == dga.diff.end() || !dga.has(y) || x == y) return std::nullopt;
  if (x.degree() != y.degree() + 1) return std::nullopt;
  LaurentInt c = it->second.linear_coefficient(y);
  if (!c.is_unit()) return std::nullopt;
  DgaElement r = it->second - c * DgaElement::generator(y);
  if (r.contains(y)) return std::nullopt;
  return Cancellation{x, y, c, std::move(r)};
}

namespace {

void cancel_in_place(Dga& dga, const Cancellation& c) {
  DgaElement zero;
  DgaElement y_image = -(c.c.unit_inverse() * c.r);
  auto pi = [&](const Generator& g) -> const DgaElement* {
    if (g == c.x) return &zero;
    if (g == c.y) return &y_image;
    return nullptr;
  };
  dga.diff.erase(c.x);
  dga.diff.erase(c.y);
  for (auto& [g, dg] : dga.diff)
    if (dg.contains(c.x) || dg.contains(c.y)) dg = dg.substitute(pi);
}

}  // namespace

Dga cancel_pair(const Dga& dga, const Generator& x, const Generator& y, Cancellation* record) {
  auto shape = cancellation_shape(dga, x, y);
  if (!shape) {
    std::string why = !dga.has(x)   ? x.name() + " not in dga"
                      : !dga.has(y) ? y.name() + " not in dga"
                                    : "d " + x.name() + " = " + dga.diff.at(x).to_string() +
                                          " is not a unit multiple of " + y.name() + " plus a " +
                                          y.name() + "-free remainder";
    throw MoveError("cannot cancel (" + x.name() + ", " + y.name() + "): " + why);
  }
  Dga out = dga;
  cancel_in_place(out, *shape);
  if (record) *record = std::move(*shape);
  return out;
}

std::string Label::to_string() const {
  switch (space) {
    case Space::Sheet: return "sheet:s" + std::to_string(id);
    case Space::Curve: return "curve:c" + std::to_string(id);
    case Space::Triple: return "triple:t" + std::to_string(id);
    case Space::Branch: return "branch:b" + std::to_string(id);
    default: return "?";
  }
}

Label parse_label(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad label '" + text + "'");
  std::string kind = text.substr(0, colon), tok = text.substr(colon + 1);
  Label l;
  if (kind == "sheet") l.space = Space::Sheet;
  else if (kind == "curve") l.space = Space::Curve;
  else if (kind == "triple") l.space = Space::Triple;
  else if (kind == "branch") l.space = Space::Branch;
  else throw std::invalid_argument("bad label kind '" + kind + "'");
  if (tok.size() < 2 || tok[0] != space_prefix(l.space))
    throw std::invalid_argument("bad label '" + text + "'");
  std::size_t used = 0;
  try {
    l.id = std::stoi(tok.substr(1), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tok.size() - 1 || l.id < 1)
    throw std::invalid_argument("bad label '" + text + "'");
  return l;
}

Dga destabilize_along(const Dga& dga, const Label& higher, const Label& lower,
                      std::vector<Cancellation>* trace, const DestabOptions& options) {
  bool shape_ok = (higher.space == Space::Curve && lower.space == Space::Sheet) ||
                  (higher.space == Space::Triple && lower.space == Space::Curve) ||
                  (higher.space == Space::Branch && lower.space == Space::Curve);
  if (!shape_ok)
    throw MoveError("destabilization must go curve->sheet, triple->curve or branch->curve, got " +
                    higher.to_string() + " -> " + lower.to_string());
  auto doomed_gen = [&](const Generator& g) {
    return g.mentions(higher.space, higher.id) || g.mentions(lower.space, lower.id);
  };
  auto by_degree = [](const Generator& a, const Generator& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  };
  std::set<Generator, decltype(by_degree)> doomed(by_degree);
  for (const auto& [g, dg] : dga.diff)
    if (doomed_gen(g)) doomed.insert(g);

  std::optional<std::mt19937_64> rng;
  if (options.seed) rng.emplace(*options.seed);

  Dga cur = dga;
  while (!doomed.empty()) {
    std::vector<Cancellation> tiers[2];
    for (const Generator& x : doomed) {
      if (x.degree() == 0) continue;
      const DgaElement& dx = cur.diff.at(x);
      std::vector<Generator> ys;
      for (const auto& [w, c] : dx.terms())
        if (w.size() == 1 && doomed.count(w[0]) && c.is_unit()) ys.push_back(w[0]);
      std::sort(ys.begin(), ys.end());
      for (const Generator& y : ys) {
        auto shape = cancellation_shape(cur, x, y);
        if (!shape) continue;
        bool clean = true;
        for (const auto& [w, c] : shape->r.terms()) {
          for (const auto& g : w)
            if (doomed.count(g)) {
              clean = false;
              break;
            }
          if (!clean) break;
        }
        tiers[clean ? 0 : 1].push_back(std::move(*shape));
        if (!rng && clean) break;
      }
      if (!rng && !tiers[0].empty()) break;
    }
    auto& pool = tiers[0].empty() ? tiers[1] : tiers[0];
    if (pool.empty()) {
      std::ostringstream msg;
      msg << "destabilization " << higher.to_string() << " -> " << lower.to_string()
          << " stalled; surviving generators:";
      for (const auto& g : doomed) msg << "\n  d " << g.name() << " = " << cur.diff.at(g).to_string();
      throw MoveError(msg.str());
    }
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(*rng);
    Cancellation chosen = pool[pick];
    cancel_in_place(cur, chosen);
    doomed.erase(chosen.x);
    doomed.erase(chosen.y);
    if (options.strict) require_d2(cur, chosen.trace_line());
    if (trace) trace->push_back(std::move(chosen));
  }
  return cur;
}

int Relabel::apply(Space s, int v) const {
  auto it = map.find({s, v});
  return it == map.end() ? v : it->second;
}

Generator Relabel::apply(const Generator& g) const {
  if (g.kind == Kind::Stab) return g;
  const auto& info = kind_info(g.kind);
  Generator out = g;
  if (info.arity >= 1) out.a = apply(info.args[0], g.a);
  if (info.arity >= 2) out.b = apply(info.args[1], g.b);
  return out;
}

Relabel Relabel::parse(const std::vector<std::string>& tokens) {
  Relabel r;
  for (const auto& tok : tokens) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq < 2 || eq + 2 >= tok.size() || tok[0] != tok[eq + 1])
      throw std::invalid_argument("bad relabel entry '" + tok + "' (expected e.g. s3=s1)");
    Space s;
    switch (tok[0]) {
      case 's': s = Space::Sheet; break;
      case 'c': s = Space::Curve; break;
      case 't': s = Space::Triple; break;
      case 'b': s = Space::Branch; break;
      default: throw std::invalid_argument("bad relabel entry '" + tok + "'");
    }
    int from = std::stoi(tok.substr(1, eq - 1));
    int to = std::stoi(tok.substr(eq + 2));
    if (!r.map.emplace(std::make_pair(s, from), to).second)
      throw std::invalid_argument("label relabelled twice in '" + tok + "'");
  }
  return r;
}

Dga relabel(const Dga& dga, const Relabel& map) {
  std::map<std::pair<Space, int>, std::pair<Space, int>> seen;  // image -> source
  auto note = [&](Space s, int v) {
    int w = map.apply(s, v);
    auto [it, fresh] = seen.emplace(std::make_pair(s, w), std::make_pair(s, v));
    if (!fresh && it->second.second != v)
      throw MoveError(std::string("relabel is not injective: ") + space_prefix(s) +
                      std::to_string(it->second.second) + " and " + space_prefix(s) +
                      std::to_string(v) + " both map to " + space_prefix(s) + std::to_string(w));
  };
  auto note_gen = [&](const Generator& g) {
    if (g.kind == Kind::Stab) return;
    const auto& info = kind_info(g.kind);
    if (info.arity >= 1) note(info.args[0], g.a);
    if (info.arity >= 2) note(info.args[1], g.b);
  };
  for (const auto& [g, dg] : dga.diff) {
    note_gen(g);
    for (const auto& [w, c] : dg.terms())
      for (const auto& h : w) note_gen(h);
  }
  Dga out = with_same_header(dga);
  for (const auto& [g, dg] : dga.diff) {
    DgaElement img;
    for (const auto& [w, c] : dg.terms()) {
      Word nw;
      nw.reserve(w.size());
      for (const auto& h : w) nw.push_back(map.apply(h));
      img.add_term(std::move(nw), c);
    }
    out.diff.emplace(map.apply(g), std::move(img));
  }
  return out;
}

MoveScript MoveScript::parse(const std::string& text) {
  MoveScript script;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("script line " + std::to_string(lineno) + ": " + msg);
    };
    ScriptStep step;
    step.line = lineno;
    try {
      if (toks[0] == "destab") {
        if (toks.size() != 4 || toks[2] != "->") fail("expected 'destab <label> -> <label>'");
        step.type = ScriptStep::Type::Destab;
        step.higher = parse_label(toks[1]);
        step.lower = parse_label(toks[3]);
      } else if (toks[0] == "cancel") {
        if (toks.size() != 3) fail("expected 'cancel <gen> <gen>'");
        step.type = ScriptStep::Type::Cancel;
        step.x = toks[1];
        step.y = toks[2];
      } else if (toks[0] == "stab") {
        if (toks.size() != 2) fail("expected 'stab <degree>'");
        step.type = ScriptStep::Type::Stab;
        step.degree = std::stoi(toks[1]);
      } else if (toks[0] == "relabel") {
        step.type = ScriptStep::Type::Relabel;
        step.relabel = Relabel::parse({toks.begin() + 1, toks.end()});
      } else {
        fail("unknown step '" + toks[0] + "'");
      }
    } catch (const std::invalid_argument& e) {
      std::string what = e.what();
      if (what.starts_with("script line")) throw;
      fail(what);
    }
    script.steps.push_back(std::move(step));
  }
  return script;
}

ScriptResult run_move_script(const Dga& dga, const MoveScript& script,
                             const DestabOptions& options) {
  ScriptResult res{dga, {}};
  for (const auto& step : script.steps) {
    std::string where = "step at line " + std::to_string(step.line);
    try {
      switch (step.type) {
        case ScriptStep::Type::Destab: {
          res.trace.push_back("destab " + step.higher.to_string() + " -> " + step.lower.to_string());
          std::vector<Cancellation> cs;
          try {
            res.dga = destabilize_along(res.dga, step.higher, step.lower, &cs, options);
          } catch (...) {
            for (const auto& c : cs) res.trace.push_back(c.trace_line());
            throw;
          }
          for (const auto& c : cs) res.trace.push_back(c.trace_line());
          break;
        }
        case ScriptStep::Type::Cancel: {
          auto lookup = stab_lookup(res.dga);
          Generator x = parse_generator(step.x, lookup);
          Generator y = parse_generator(step.y, lookup);
          Cancellation c;
          res.dga = cancel_pair(res.dga, x, y, &c);
          res.trace.push_back(c.trace_line());
          break;
        }
        case ScriptStep::Type::Stab: {
          int idx = res.dga.next_stab;
          res.dga = stabilize(res.dga, step.degree);
          res.trace.push_back("stab deg=" + std::to_string(step.degree) + " e1=" +
                              make_stab(idx, 1, step.degree + 1).name() +
                              " e2=" + make_stab(idx, 2, step.degree).name());
          break;
        }
        case ScriptStep::Type::Relabel: {
          res.dga = relabel(res.dga, step.relabel);
          res.trace.push_back("relabel");
          break;
        }
      }
      if (options.strict) require_d2(res.dga, where);
    } catch (const std::exception& e) {
      throw ScriptError(where + ": " + e.what(), res.trace);
    }
  }
  return res;
}

Comparison dga_equal_up_to_relabel(const Dga& a, const Dga& b, const Relabel& map) {
  Dga ra = relabel(a, map);
  auto ia = ra.diff.begin();
  auto ib = b.diff.begin();
  while (ia != ra.diff.end() || ib != b.diff.end()) {
    if (ib == b.diff.end() || (ia != ra.diff.end() && ia->first < ib->first))
      return {false, "generator " + ia->first.name() + " only in the first dga"};
    if (ia == ra.diff.end() || ib->first < ia->first)
      return {false, "generator " + ib->first.name() + " only in the second dga"};
    ++ia;
    ++ib;
  }
  for (const auto& [g, dg] : ra.diff) {
    const DgaElement& other = b.diff.at(g);
    if (!(dg == other))
      return {false, "d " + g.name() + " differs: " + dg.to_string() + " vs " + other.to_string()};
  }
  return {true, ""};
}

}  // namespace roseman
