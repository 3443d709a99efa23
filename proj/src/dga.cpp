#include "roseman/dga.hpp"

#include <future>
#include <sstream>
#include <thread>

namespace roseman {

int Dga::stab_degree(int index, int role) const {
  auto it = diff.lower_bound(make_stab(index, role, -1000000));
  if (it != diff.end() && it->first.kind == Kind::Stab && it->first.a == index &&
      it->first.b == role)
    return it->first.stab_degree;
  throw std::invalid_argument("unknown stabilization generator stab" + std::to_string(index) +
                              "." + std::to_string(role));
}

namespace {

int label_count(const Diagram& d, Space s) {
  switch (s) {
    case Space::Sheet: return d.sheets;
    case Space::Curve: return static_cast<int>(d.curves.size());
    case Space::Triple: return static_cast<int>(d.triples.size());
    case Space::Branch: return static_cast<int>(d.branches.size());
    default: return 0;
  }
}

bool in_range(const Diagram& d, Space s, int v) {
  if (v < 1 || v > label_count(d, s)) return false;
  return s != Space::Branch || d.branch(v).positive;
}

}  // namespace

DgaElement make_generator(const Diagram& d, Kind k, int a, int b) {
  if (k == Kind::Stab) throw std::invalid_argument("stabilization generators come from stabilize()");
  const auto& info = kind_info(k);
  if (!in_range(d, info.args[0], a) || (info.arity == 2 && !in_range(d, info.args[1], b)))
    throw std::out_of_range("label out of range for " + make_gen(k, a, b).name());
  return make_generator(k, a, b);
}

std::vector<Generator> diagram_generators(const Diagram& d) {
  std::vector<Generator> out;
  int n = d.sheets;
  int m = static_cast<int>(d.curves.size());
  int t = static_cast<int>(d.triples.size());
  std::vector<int> pos;
  for (const auto& b : d.branches)
    if (b.positive) pos.push_back(b.id);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back(make_gen(Kind::A11, i, j));
  for (int x = 1; x <= m; ++x)
    for (int i = 1; i <= n; ++i) {
      out.push_back(make_gen(Kind::A21, x, i));
      out.push_back(make_gen(Kind::A12, i, x));
    }
  for (int x = 1; x <= m; ++x) {
    out.push_back(make_gen(Kind::A2, x));
    for (int y = 1; y <= m; ++y) out.push_back(make_gen(Kind::A22, x, y));
  }
  for (int p = 1; p <= t; ++p) {
    out.push_back(make_gen(Kind::A3, p));
    for (int i = 1; i <= n; ++i) {
      out.push_back(make_gen(Kind::A31, p, i));
      out.push_back(make_gen(Kind::A13, i, p));
    }
    for (int x = 1; x <= m; ++x) {
      out.push_back(make_gen(Kind::A32, p, x));
      out.push_back(make_gen(Kind::A23, x, p));
    }
    for (int q = 1; q <= t; ++q) out.push_back(make_gen(Kind::A33, p, q));
  }
  for (int k : pos) {
    out.push_back(make_gen(Kind::Ab, k));
    for (int i = 1; i <= n; ++i) {
      out.push_back(make_gen(Kind::Ab1, k, i));
      out.push_back(make_gen(Kind::A1b, i, k));
    }
    for (int x = 1; x <= m; ++x) {
      out.push_back(make_gen(Kind::Ab2, k, x));
      out.push_back(make_gen(Kind::A2b, x, k));
    }
    for (int p = 1; p <= t; ++p) {
      out.push_back(make_gen(Kind::Ab3, k, p));
      out.push_back(make_gen(Kind::A3b, p, k));
    }
    for (int l : pos) out.push_back(make_gen(Kind::Abb, k, l));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Dga build_dga(const Diagram& d, Variant v, const TableSet& tables) {
  auto problems = validate_diagram(d);
  if (!problems.empty())
    throw std::invalid_argument("invalid diagram " + d.name + ": " + problems[0].rule + " (" +
                                problems[0].detail + ")");
  Dga dga;
  dga.name = d.name;
  dga.variant = v;
  dga.sheets = d.sheets;
  for (const auto& g : diagram_generators(d)) {
    if (g.kind == Kind::A11) {
      dga.diff.emplace(g, DgaElement{});
      continue;
    }
    const Formula& f = tables.lookup(v, g.kind);
    Binding b;
    b.value[static_cast<unsigned char>(f.vars[0])] = g.a;
    if (f.vars.size() > 1) b.value[static_cast<unsigned char>(f.vars[1])] = g.b;
    dga.diff.emplace(g, evaluate(f, b, d));
  }
  return dga;
}

DgaElement boundary(const Dga& dga, const DgaElement& e) {
  DgaElement out;
  for (const auto& [w, c] : e.terms()) {
    int sign_deg = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Generator& g = w[j];
      int deg = g.degree();
      auto it = dga.diff.find(g);
      if (it == dga.diff.end()) throw UnknownGenerator(g);
      if (deg != 0 && !it->second.is_zero()) {
        LaurentInt coeff = (sign_deg % 2) ? -c : c;
        for (const auto& [dw, dc] : it->second.terms()) {
          Word nw;
          nw.reserve(w.size() + dw.size());
          nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(j));
          nw.insert(nw.end(), dw.begin(), dw.end());
          nw.insert(nw.end(), w.begin() + static_cast<long>(j) + 1, w.end());
          out.add_term(std::move(nw), coeff * dc);
        }
      }
      sign_deg += deg;
    }
  }
  return out;
}

D2Report check_d_squared(const Dga& dga) {
  std::vector<const std::pair<const Generator, DgaElement>*> items;
  for (const auto& kv : dga.diff) items.push_back(&kv);
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  if (items.size() < 64) workers = 1;
  std::vector<D2Report> parts(workers);
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < items.size(); i += workers) {
      const auto& [g, dg] = *items[i];
      auto deg = dg.degree();
      if (!dg.is_zero() && (!deg || *deg != g.degree() - 1)) parts[w].degree_errors.push_back(g);
      DgaElement dd = boundary(dga, dg);
      if (!dd.is_zero()) parts[w].failures.push_back({g, std::move(dd)});
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::future<void>> fs;
    for (unsigned w = 0; w < workers; ++w) fs.push_back(std::async(std::launch::async, run, w));
    for (auto& f : fs) f.get();
  }
  D2Report report;
  for (auto& p : parts) {
    for (auto& f : p.failures) report.failures.push_back(std::move(f));
    for (auto& g : p.degree_errors) report.degree_errors.push_back(g);
  }
  auto by_gen = [](const auto& x, const auto& y) { return x.generator < y.generator; };
  std::sort(report.failures.begin(), report.failures.end(), by_gen);
  std::sort(report.degree_errors.begin(), report.degree_errors.end());
  return report;
}

std::string dump_dga(const Dga& dga) {
  std::ostringstream out;
  out << "dga " << dga.name << " variant=" << dga.variant.tag() << " sheets=" << dga.sheets << "\n";
  for (const auto& [g, dg] : dga.diff) out << "gen " << g.name() << " deg=" << g.degree() << "\n";
  for (const auto& [g, dg] : dga.diff) out << "d " << g.name() << " = " << dg.to_string() << "\n";
  return out.str();
}

Dga parse_dga(const std::string& text) {
  Dga dga;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  std::map<std::pair<int, int>, int> stab_deg;
  std::vector<std::pair<std::string, std::string>> pending;
  auto fail = [&](const std::string& msg) -> void {
    throw std::invalid_argument("dga line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "dga") {
      std::string var, sheets;
      ls >> dga.name >> var >> sheets;
      if (!var.starts_with("variant=") || !sheets.starts_with("sheets=")) fail("bad header");
      dga.variant = Variant::parse(var.substr(8));
      dga.sheets = std::stoi(sheets.substr(7));
      header = true;
    } else if (head == "gen") {
      std::string name, deg;
      ls >> name >> deg;
      if (!deg.starts_with("deg=")) fail("bad gen line");
      int d = std::stoi(deg.substr(4));
      Generator g;
      if (name.starts_with("stab")) {
        g = parse_generator(name);
        g.stab_degree = d;
        stab_deg[{g.a, g.b}] = d;
        dga.next_stab = std::max(dga.next_stab, g.a + 1);
      } else {
        g = parse_generator(name);
        if (g.degree() != d) fail("degree mismatch for " + name);
      }
      dga.diff.emplace(g, DgaElement{});
    } else if (head == "d") {
      std::string name, eq;
      ls >> name >> eq;
      if (eq != "=") fail("expected '='");
      std::string rest;
      std::getline(ls, rest);
      pending.emplace_back(name, rest);
    } else {
      fail("unknown line '" + head + "'");
    }
  }
  if (!header) throw std::invalid_argument("dga: missing header");
  auto sd = [&](int idx, int role) {
    auto it = stab_deg.find({idx, role});
    if (it == stab_deg.end())
      throw std::invalid_argument("dga: undeclared stab" + std::to_string(idx));
    return it->second;
  };
  for (const auto& [name, body] : pending) {
    Generator g = parse_generator(name, sd);
    auto it = dga.diff.find(g);
    if (it == dga.diff.end()) throw std::invalid_argument("dga: d for undeclared " + name);
    it->second = parse_element(body, sd);
  }
  return dga;
}

}  // namespace roseman
