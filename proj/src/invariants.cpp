#include "roseman/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace roseman {

Presentation characteristic_presentation(const Dga& dga) {
  Presentation pres;
  pres.name = dga.name;
  for (const auto& [g, dg] : dga.diff) {
    pres.generators.push_back(g);
    if (g.degree() > 0) pres.relations.push_back(dg);
  }
  return pres;
}

Presentation hr0_presentation(const Dga& dga) {
  Presentation pres;
  pres.name = dga.name;
  for (const auto& [g, dg] : dga.diff) {
    if (g.degree() == 0) pres.generators.push_back(g);
    if (g.degree() == 1) pres.relations.push_back(dg);
  }
  return pres;
}

std::string dump_presentation(const Presentation& pres) {
  std::ostringstream out;
  out << "pres " << pres.name << "\n";
  for (const auto& g : pres.generators) out << "gen " << g.name() << " deg=" << g.degree() << "\n";
  for (const auto& r : pres.relations) out << "rel " << r.to_string() << "\n";
  return out.str();
}

Presentation parse_presentation(const std::string& text) {
  Presentation pres;
  std::map<std::pair<int, int>, int> stab;
  std::vector<std::string> rels;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw std::invalid_argument("presentation line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.starts_with("pres ")) {
      pres.name = line.substr(5);
    } else if (line.starts_with("gen ")) {
      std::istringstream ls(line.substr(4));
      std::string name, deg;
      ls >> name >> deg;
      if (!deg.starts_with("deg=")) fail("bad gen line");
      int d = std::stoi(deg.substr(4));
      Generator g = parse_generator(name, [&](int, int) { return d; });
      if (g.kind == Kind::Stab) stab[{g.a, g.b}] = d;
      else if (g.degree() != d) fail("degree mismatch for " + name);
      pres.generators.push_back(g);
    } else if (line.starts_with("rel ")) {
      rels.push_back(line.substr(4));
    } else {
      fail("unknown line");
    }
  }
  auto sd = [&](int idx, int role) {
    auto it = stab.find({idx, role});
    if (it == stab.end()) throw std::invalid_argument("presentation: undeclared stab generator");
    return it->second;
  };
  for (const auto& r : rels) pres.relations.push_back(parse_element(r, sd));
  return pres;
}

MapCount make_map_count(std::uint32_t p, BigInt total, bool exact) {
  MapCount m;
  m.p = p;
  m.exact = exact;
  m.total = total;
  m.p_free_part = total;
  if (total != 0) {
    while (m.p_free_part % p == 0) {
      m.p_free_part /= p;
      ++m.p_valuation;
    }
  }
  return m;
}

std::string MapCount::report() const {
  std::ostringstream out;
  out << "count p=" << p << " total=";
  if (exact) {
    out << total << " v_p=" << p_valuation << " pfree=" << p_free_part;
  } else {
    out << "partial counted=" << total << " explored=" << explored << " nodes=" << nodes;
  }
  return out.str();
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("ROSEMAN_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

namespace {

using Var = std::uint32_t;
using Mono = std::vector<Var>;  // sorted, repeated for powers
using Poly = std::vector<std::pair<Mono, std::uint32_t>>;  // sorted by monomial, nonzero coefficients

struct Field {
  std::uint32_t p;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
  std::uint32_t inv(std::uint32_t a) const { return inv_mod(a, p); }
};

// x^p = x as functions on F_p, so exponents reduce into 1..p-1.
void reduce_powers(Mono& m, std::uint32_t p) {
  Mono out;
  out.reserve(m.size());
  for (std::size_t i = 0; i < m.size();) {
    std::size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    std::size_t e = j - i;
    if (e >= p) e = (e - 1) % (p - 1) + 1;
    out.insert(out.end(), e, m[i]);
    i = j;
  }
  m.swap(out);
}

void normalize(Poly& poly, const Field& f) {
  std::sort(poly.begin(), poly.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Poly out;
  out.reserve(poly.size());
  for (auto& t : poly) {
    if (!out.empty() && out.back().first == t.first) out.back().second = f.add(out.back().second, t.second);
    else out.push_back(std::move(t));
    if (out.back().second == 0) out.pop_back();
  }
  // a cancelled term may have hidden a duplicate behind it
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].first == out[i - 1].first) return normalize(out, f), void(poly = std::move(out));
  poly = std::move(out);
}

Poly multiply(const Poly& a, const Poly& b, const Field& f) {
  Poly out;
  out.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      reduce_powers(m, f.p);
      out.emplace_back(std::move(m), f.mul(ca, cb));
    }
  normalize(out, f);
  return out;
}

bool mentions(const Poly& poly, Var v) {
  for (const auto& [m, c] : poly)
    if (std::binary_search(m.begin(), m.end(), v)) return true;
  return false;
}

// Replaces v by `value` (a polynomial not containing v).
Poly substitute(const Poly& poly, Var v, const Poly& value, const Field& f) {
  Poly out;
  std::vector<Poly> powers{Poly{{Mono{}, 1}}};
  for (const auto& [m, c] : poly) {
    auto lo = std::lower_bound(m.begin(), m.end(), v);
    auto hi = std::upper_bound(lo, m.end(), v);
    std::size_t e = static_cast<std::size_t>(hi - lo);
    if (e == 0) {
      out.emplace_back(m, c);
      continue;
    }
    while (powers.size() <= e) powers.push_back(multiply(powers.back(), value, f));
    Mono rest(m.begin(), lo);
    rest.insert(rest.end(), hi, m.end());
    for (const auto& [pm, pc] : powers[e]) {
      Mono nm;
      nm.reserve(rest.size() + pm.size());
      std::merge(rest.begin(), rest.end(), pm.begin(), pm.end(), std::back_inserter(nm));
      reduce_powers(nm, f.p);
      out.emplace_back(std::move(nm), f.mul(c, pc));
    }
  }
  normalize(out, f);
  return out;
}

Poly constant(std::uint32_t c) {
  if (c == 0) return {};
  return {{Mono{}, c}};
}

struct BudgetExceeded {};

class Solver {
public:
  Solver(const Field& f, const std::vector<int>& var_degree, std::uint64_t budget)
      : f_(f), var_degree_(var_degree), budget_(budget) {}

  // Number of assignments of `vars` satisfying `system`.
  BigInt count(std::vector<Poly> system, std::vector<Var> vars, double weight) {
    if (++nodes_ > budget_) throw BudgetExceeded{};
    if (!simplify(system, vars)) {
      done_ += weight;
      return 0;
    }
    // free variables and independent components
    std::unordered_map<Var, std::size_t> where;
    for (std::size_t i = 0; i < vars.size(); ++i) where[vars[i]] = i;
    std::vector<std::size_t> parent(vars.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    std::vector<bool> used(vars.size(), false);
    std::vector<std::size_t> first_var(system.size(), SIZE_MAX);
    for (std::size_t k = 0; k < system.size(); ++k)
      for (const auto& [m, c] : system[k])
        for (Var v : m) {
          std::size_t i = where.at(v);
          used[i] = true;
          if (first_var[k] == SIZE_MAX) first_var[k] = i;
          else parent[find(i)] = find(first_var[k]);
        }
    std::size_t free_vars = 0;
    for (bool u : used) free_vars += !u;
    BigInt result = pow_big(free_vars);
    if (system.empty()) {
      done_ += weight;
      return result;
    }
    std::map<std::size_t, std::pair<std::vector<Poly>, std::vector<Var>>> comps;
    for (std::size_t k = 0; k < system.size(); ++k) comps[find(first_var[k])].first.push_back(std::move(system[k]));
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (used[i]) comps[find(i)].second.push_back(vars[i]);
    if (comps.size() == 1) {
      auto& [sys, cv] = comps.begin()->second;
      return result * branch(std::move(sys), std::move(cv), weight);
    }
    // only the last component's progress counts towards the explored fraction
    std::size_t left = comps.size();
    for (auto& [root, comp] : comps) {
      --left;
      BigInt c;
      if (left == 0) {
        c = branch(std::move(comp.first), std::move(comp.second), weight);
      } else {
        double saved = done_;
        c = branch(std::move(comp.first), std::move(comp.second), 0.0);
        done_ = saved;
      }
      if (c == 0) {
        done_ += left == 0 ? 0.0 : weight;
        return 0;
      }
      result *= c;
    }
    return result;
  }

  std::uint64_t nodes() const { return nodes_; }
  double done() const { return done_; }

private:
  BigInt pow_big(std::size_t e) const {
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= f_.p;
    return r;
  }

  // Drops solved equations and eliminates variables occurring as c*v with a
  // v-free rest. Returns false when the system is inconsistent.
  bool simplify(std::vector<Poly>& system, std::vector<Var>& vars) {
    while (true) {
      std::vector<Poly> kept;
      kept.reserve(system.size());
      for (auto& poly : system) {
        if (poly.empty()) continue;
        if (poly.size() == 1 && poly[0].first.empty()) return false;
        kept.push_back(std::move(poly));
      }
      system.swap(kept);
      if (system.empty()) return true;

      std::unordered_map<Var, int> occurrences;
      for (const auto& poly : system) {
        Mono seen;
        for (const auto& [m, c] : poly)
          for (Var v : m) seen.push_back(v);
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (Var v : seen) ++occurrences[v];
      }
      // candidate: (equation, variable) where the variable's only monomial is [v]
      long best_cost = -1;
      std::size_t best_k = 0;
      Var best_v = 0;
      std::uint32_t best_c = 0;
      for (std::size_t k = 0; k < system.size(); ++k) {
        const Poly& poly = system[k];
        std::unordered_map<Var, int> count_in;
        bool affine = true;
        for (const auto& [m, c] : poly) {
          if (m.size() > 1) affine = false;
          Var last = UINT32_MAX;
          for (Var v : m)
            if (v != last) ++count_in[v], last = v;
        }
        for (const auto& [m, c] : poly) {
          if (m.size() != 1 || count_in[m[0]] != 1) continue;
          Var v = m[0];
          long others = occurrences[v] - 1;
          long cost = others == 0 ? 0 : (affine ? 1 : 2) * 1000000L + others * static_cast<long>(poly.size());
          if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best_k = k;
            best_v = v;
            best_c = c;
          }
        }
      }
      if (best_cost < 0) return true;
      Poly rest;
      std::uint32_t scale = f_.neg(f_.inv(best_c));
      for (const auto& [m, c] : system[best_k])
        if (!(m.size() == 1 && m[0] == best_v)) rest.emplace_back(m, f_.mul(c, scale));
      system.erase(system.begin() + static_cast<long>(best_k));
      vars.erase(std::find(vars.begin(), vars.end(), best_v));
      if (best_cost > 0)
        for (auto& poly : system)
          if (mentions(poly, best_v)) poly = substitute(poly, best_v, rest, f_);
    }
  }

  BigInt branch(std::vector<Poly> system, std::vector<Var> vars, double weight) {
    std::unordered_map<Var, long> score;
    for (const auto& poly : system)
      for (const auto& [m, c] : poly)
        if (m.size() > 1)
          for (Var v : m) ++score[v];
    Var pick = vars.front();
    long best = -1;
    for (Var v : vars) {
      long s = score.count(v) ? score[v] : 0;
      if (s > best || (s == best && var_degree_[v] < var_degree_[pick])) {
        best = s;
        pick = v;
      }
    }
    std::vector<Var> rest_vars;
    rest_vars.reserve(vars.size() - 1);
    for (Var v : vars)
      if (v != pick) rest_vars.push_back(v);
    BigInt total = 0;
    for (std::uint32_t val = 0; val < f_.p; ++val) {
      std::vector<Poly> sub;
      sub.reserve(system.size());
      Poly value = constant(val);
      for (const auto& poly : system) sub.push_back(mentions(poly, pick) ? substitute(poly, pick, value, f_) : poly);
      total += count(std::move(sub), rest_vars, weight / f_.p);
    }
    return total;
  }

  Field f_;
  const std::vector<int>& var_degree_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  double done_ = 0.0;
};

std::vector<Poly> to_polys(const Presentation& pres, const std::map<Generator, Var>& index,
                           const Field& f, std::uint32_t mu) {
  std::vector<Poly> out;
  for (const auto& rel : pres.relations) {
    Poly poly;
    for (const auto& [w, c] : rel.terms()) {
      std::uint32_t cv = c.eval_mod_p(f.p, mu);
      if (cv == 0) continue;
      Mono m;
      for (const auto& g : w) {
        auto it = index.find(g);
        if (it == index.end())
          throw std::invalid_argument("relation mentions " + g.name() + ", which is not a generator");
        m.push_back(it->second);
      }
      std::sort(m.begin(), m.end());
      reduce_powers(m, f.p);
      poly.emplace_back(std::move(m), cv);
    }
    normalize(poly, f);
    out.push_back(std::move(poly));
  }
  return out;
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

}  // namespace

MapCount count_algebra_maps(const Presentation& pres, std::uint32_t p, std::uint64_t budget) {
  require_prime(p);
  if (budget == 0) throw std::invalid_argument("budget must be positive");
  Field f{p};
  std::map<Generator, Var> index;
  std::vector<int> degree;
  for (const auto& g : pres.generators)
    if (index.emplace(g, static_cast<Var>(degree.size())).second) degree.push_back(g.degree());
  std::vector<Var> vars(degree.size());
  std::iota(vars.begin(), vars.end(), 0);
  Solver solver(f, degree, budget);
  BigInt total = 0;
  double per_mu = 1.0 / (p - 1);
  try {
    for (std::uint32_t mu = 1; mu < p; ++mu) total += solver.count(to_polys(pres, index, f, mu), vars, per_mu);
  } catch (const BudgetExceeded&) {
    MapCount m = make_map_count(p, total, false);
    m.nodes = solver.nodes();
    m.explored = solver.done();
    return m;
  }
  MapCount m = make_map_count(p, total, true);
  m.nodes = solver.nodes();
  return m;
}

MapCount brute_force_count_maps(const Presentation& pres, std::uint32_t p, std::uint64_t cap) {
  require_prime(p);
  Field f{p};
  std::map<Generator, Var> index;
  for (const auto& g : pres.generators) index.emplace(g, static_cast<Var>(index.size()));
  std::size_t n = index.size();
  BigInt assignments = p - 1;
  for (std::size_t i = 0; i < n; ++i) assignments *= p;
  if (assignments > cap) throw std::invalid_argument("brute force: too many assignments");
  BigInt total = 0;
  std::vector<std::uint32_t> value(n, 0);
  for (std::uint32_t mu = 1; mu < p; ++mu) {
    auto polys = to_polys(pres, index, f, mu);
    std::fill(value.begin(), value.end(), 0);
    while (true) {
      bool ok = true;
      for (const auto& poly : polys) {
        std::uint32_t acc = 0;
        for (const auto& [m, c] : poly) {
          std::uint32_t t = c;
          for (Var v : m) t = f.mul(t, value[v]);
          acc = f.add(acc, t);
        }
        if (acc != 0) {
          ok = false;
          break;
        }
      }
      if (ok) ++total;
      std::size_t i = 0;
      while (i < n && ++value[i] == p) value[i++] = 0;
      if (i == n) break;
    }
  }
  return make_map_count(p, total, true);
}

bool Fingerprint::matches(const Fingerprint& other) const {
  if (counts.size() != other.counts.size()) return false;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto& a = counts[i];
    const auto& b = other.counts[i];
    if (a.p != b.p || !a.exact || !b.exact || a.p_free_part != b.p_free_part) return false;
  }
  return true;
}

std::string Fingerprint::report() const {
  std::string out;
  for (const auto& c : counts) out += c.report() + "\n";
  return out;
}

Fingerprint fingerprint(const Presentation& pres, const std::vector<std::uint32_t>& primes,
                        std::uint64_t budget) {
  Fingerprint fp;
  for (auto p : primes) fp.counts.push_back(count_algebra_maps(pres, p, budget));
  return fp;
}

}  // namespace roseman
