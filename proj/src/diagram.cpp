#include "roseman/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#ifndef ROSEMAN_FIXTURE_DIR
#define ROSEMAN_FIXTURE_DIR "fixtures"
#endif

namespace roseman {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_id(const std::string& tok, char prefix, int line) {
  if (tok.size() < 2 || tok[0] != prefix)
    throw DiagramError(line, "expected label with prefix '" + std::string(1, prefix) + "', got '" +
                                 tok + "'");
  int v = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') throw DiagramError(line, "bad label '" + tok + "'");
    v = v * 10 + (tok[i] - '0');
    if (v > 1000000) throw DiagramError(line, "label too large '" + tok + "'");
  }
  if (v < 1) throw DiagramError(line, "labels start at 1: '" + tok + "'");
  return v;
}

struct Fields {
  std::map<std::string, std::string> kv;
  int line;
  std::string take(const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw DiagramError(line, "missing field '" + key + "'");
    std::string v = it->second;
    kv.erase(it);
    return v;
  }
  void finish() const {
    if (!kv.empty()) throw DiagramError(line, "unknown field '" + kv.begin()->first + "'");
  }
};

Fields fields_of(const std::vector<std::string>& toks, int line) {
  Fields f{{}, line};
  for (std::size_t i = 2; i < toks.size(); ++i) {
    auto eq = toks[i].find('=');
    if (eq == std::string::npos || eq == 0)
      throw DiagramError(line, "expected key=value, got '" + toks[i] + "'");
    auto key = toks[i].substr(0, eq);
    if (!f.kv.emplace(key, toks[i].substr(eq + 1)).second)
      throw DiagramError(line, "repeated field '" + key + "'");
  }
  return f;
}

template <class T>
void place(std::map<int, std::pair<T, int>>& into, int id, T value, int line, const char* what) {
  if (!into.emplace(id, std::make_pair(std::move(value), line)).second)
    throw DiagramError(line, std::string("duplicate ") + what + " label " + std::to_string(id));
}

template <class T>
std::vector<T> densify(const std::map<int, std::pair<T, int>>& m, const char* what) {
  std::vector<T> out;
  int expect = 1;
  for (const auto& [id, entry] : m) {
    if (id != expect)
      throw DiagramError(entry.second, std::string(what) + " labels are not dense: expected " +
                                           std::to_string(expect) + ", got " + std::to_string(id));
    out.push_back(entry.first);
    ++expect;
  }
  return out;
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
  Diagram d;
  bool have_name = false, have_sheets = false;
  int sheets_line = 0;
  std::map<int, std::pair<DoubleCurve, int>> curves;
  std::map<int, std::pair<TriplePoint, int>> triples;
  std::map<int, std::pair<BranchPoint, int>> branches;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto toks = split_ws(raw);
    if (toks.empty()) continue;
    const auto& head = toks[0];
    if (head == "diagram") {
      if (have_name) throw DiagramError(line, "duplicate 'diagram' line");
      if (toks.size() != 2) throw DiagramError(line, "expected 'diagram <name>'");
      d.name = toks[1];
      have_name = true;
    } else if (head == "sheets") {
      if (have_sheets) throw DiagramError(line, "duplicate 'sheets' line");
      if (toks.size() != 2) throw DiagramError(line, "expected 'sheets <n>'");
      try {
        std::size_t used = 0;
        d.sheets = std::stoi(toks[1], &used);
        if (used != toks[1].size() || d.sheets < 0) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw DiagramError(line, "bad sheet count '" + toks[1] + "'");
      }
      have_sheets = true;
      sheets_line = line;
    } else if (head == "curve") {
      if (toks.size() < 2) throw DiagramError(line, "expected curve label");
      DoubleCurve c;
      c.id = parse_id(toks[1], 'c', line);
      auto f = fields_of(toks, line);
      c.over = parse_id(f.take("over"), 's', line);
      c.u_plus = parse_id(f.take("uplus"), 's', line);
      c.u_minus = parse_id(f.take("uminus"), 's', line);
      f.finish();
      place(curves, c.id, c, line, "curve");
    } else if (head == "triple") {
      if (toks.size() < 2) throw DiagramError(line, "expected triple label");
      TriplePoint t;
      t.id = parse_id(toks[1], 't', line);
      auto f = fields_of(toks, line);
      t.t = parse_id(f.take("t"), 's', line);
      t.m_plus = parse_id(f.take("mplus"), 's', line);
      t.m_minus = parse_id(f.take("mminus"), 's', line);
      t.b[0] = parse_id(f.take("bpp"), 's', line);
      t.b[1] = parse_id(f.take("bpm"), 's', line);
      t.b[2] = parse_id(f.take("bmp"), 's', line);
      t.b[3] = parse_id(f.take("bmm"), 's', line);
      t.tm = parse_id(f.take("tm"), 'c', line);
      t.mb_plus = parse_id(f.take("mbplus"), 'c', line);
      t.mb_minus = parse_id(f.take("mbminus"), 'c', line);
      t.tb_plus = parse_id(f.take("tbplus"), 'c', line);
      t.tb_minus = parse_id(f.take("tbminus"), 'c', line);
      f.finish();
      place(triples, t.id, t, line, "triple");
    } else if (head == "branch") {
      if (toks.size() < 2) throw DiagramError(line, "expected branch label");
      BranchPoint b;
      b.id = parse_id(toks[1], 'b', line);
      auto f = fields_of(toks, line);
      auto sign = f.take("sign");
      if (sign != "+" && sign != "-") throw DiagramError(line, "sign must be + or -");
      b.positive = sign == "+";
      b.curve = parse_id(f.take("curve"), 'c', line);
      b.sheet = parse_id(f.take("sheet"), 's', line);
      f.finish();
      place(branches, b.id, b, line, "branch");
    } else {
      throw DiagramError(line, "unknown directive '" + head + "'");
    }
  }
  if (!have_name) throw DiagramError(line, "missing 'diagram' line");
  if (!have_sheets) throw DiagramError(line, "missing 'sheets' line");

  auto check_sheet = [&](int s, int at) {
    if (s > d.sheets)
      throw DiagramError(at, "dangling reference to sheet s" + std::to_string(s));
  };
  auto check_curve = [&](int c, int at) {
    if (!curves.count(c))
      throw DiagramError(at, "dangling reference to curve c" + std::to_string(c));
  };
  for (const auto& [id, e] : curves) {
    check_sheet(e.first.over, e.second);
    check_sheet(e.first.u_plus, e.second);
    check_sheet(e.first.u_minus, e.second);
  }
  for (const auto& [id, e] : triples) {
    const auto& t = e.first;
    for (int s : {t.t, t.m_plus, t.m_minus, t.b[0], t.b[1], t.b[2], t.b[3]}) check_sheet(s, e.second);
    for (int c : {t.tm, t.mb_plus, t.mb_minus, t.tb_plus, t.tb_minus}) check_curve(c, e.second);
  }
  for (const auto& [id, e] : branches) {
    check_curve(e.first.curve, e.second);
    check_sheet(e.first.sheet, e.second);
  }
  (void)sheets_line;
  d.curves = densify(curves, "curve");
  d.triples = densify(triples, "triple");
  d.branches = densify(branches, "branch");
  return d;
}

std::string serialize_diagram(const Diagram& d) {
  std::ostringstream out;
  out << "diagram " << d.name << "\nsheets " << d.sheets << "\n";
  auto s = [](int v) { return "s" + std::to_string(v); };
  auto c = [](int v) { return "c" + std::to_string(v); };
  for (const auto& x : d.curves)
    out << "curve c" << x.id << " over=" << s(x.over) << " uplus=" << s(x.u_plus)
        << " uminus=" << s(x.u_minus) << "\n";
  for (const auto& t : d.triples)
    out << "triple t" << t.id << " t=" << s(t.t) << " mplus=" << s(t.m_plus)
        << " mminus=" << s(t.m_minus) << " bpp=" << s(t.b[0]) << " bpm=" << s(t.b[1])
        << " bmp=" << s(t.b[2]) << " bmm=" << s(t.b[3]) << " tm=" << c(t.tm)
        << " mbplus=" << c(t.mb_plus) << " mbminus=" << c(t.mb_minus)
        << " tbplus=" << c(t.tb_plus) << " tbminus=" << c(t.tb_minus) << "\n";
  for (const auto& b : d.branches)
    out << "branch b" << b.id << " sign=" << (b.positive ? '+' : '-') << " curve=" << c(b.curve)
        << " sheet=" << s(b.sheet) << "\n";
  return out.str();
}

std::vector<Violation> validate_diagram(const Diagram& d) {
  std::vector<Violation> out;
  auto sheet_ok = [&](int s) { return s >= 1 && s <= d.sheets; };
  auto curve_ok = [&](int c) { return c >= 1 && c <= static_cast<int>(d.curves.size()); };
  auto tag = [](char p, int v) { return std::string(1, p) + std::to_string(v); };

  for (std::size_t i = 0; i < d.curves.size(); ++i) {
    const auto& c = d.curves[i];
    if (c.id != static_cast<int>(i) + 1)
      out.push_back({"dense labels", "curve at position " + std::to_string(i + 1) + " has id " +
                                         std::to_string(c.id)});
    if (!sheet_ok(c.over) || !sheet_ok(c.u_plus) || !sheet_ok(c.u_minus))
      out.push_back({"dangling reference", "curve " + tag('c', c.id) + " names a missing sheet"});
  }
  for (std::size_t i = 0; i < d.triples.size(); ++i) {
    const auto& t = d.triples[i];
    std::string who = tag('t', t.id);
    if (t.id != static_cast<int>(i) + 1)
      out.push_back({"dense labels", "triple at position " + std::to_string(i + 1) +
                                         " has id " + std::to_string(t.id)});
    bool refs = true;
    for (int s : {t.t, t.m_plus, t.m_minus, t.b[0], t.b[1], t.b[2], t.b[3]}) refs &= sheet_ok(s);
    for (int c : {t.tm, t.mb_plus, t.mb_minus, t.tb_plus, t.tb_minus}) refs &= curve_ok(c);
    if (!refs) {
      out.push_back({"dangling reference", "triple " + who + " names a missing sheet or curve"});
      continue;
    }
    // a loop curve leaves the triple point and comes back, so it fills two slots
    std::map<int, int> uses;
    for (int c : {t.tm, t.mb_plus, t.mb_minus, t.tb_plus, t.tb_minus}) ++uses[c];
    for (const auto& [c, n] : uses)
      if (n > 2)
        out.push_back({"triple curve ends", "triple " + who + " uses curve " + tag('c', c) + " " +
                                                std::to_string(n) + " times"});
    auto expect = [&](int curve, int over, int up, int um, const std::string& rule) {
      const auto& c = d.curve(curve);
      if (c.over != over || c.u_plus != up || c.u_minus != um)
        out.push_back({rule, "triple " + who + ": curve " + tag('c', curve) + " should be over=" +
                                 tag('s', over) + " uplus=" + tag('s', up) + " uminus=" +
                                 tag('s', um)});
    };
    expect(t.tm, t.t, t.m_plus, t.m_minus, "triple incidence tm");
    expect(t.mb_plus, t.m_plus, t.bottom(true, true), t.bottom(true, false), "triple incidence mb+");
    expect(t.mb_minus, t.m_minus, t.bottom(false, true), t.bottom(false, false),
           "triple incidence mb-");
    expect(t.tb_plus, t.t, t.bottom(true, true), t.bottom(false, true), "triple incidence tb+");
    expect(t.tb_minus, t.t, t.bottom(true, false), t.bottom(false, false), "triple incidence tb-");
  }
  for (std::size_t i = 0; i < d.branches.size(); ++i) {
    const auto& b = d.branches[i];
    std::string who = tag('b', b.id);
    if (b.id != static_cast<int>(i) + 1)
      out.push_back({"dense labels", "branch at position " + std::to_string(i + 1) + " has id " +
                                         std::to_string(b.id)});
    if (!curve_ok(b.curve) || !sheet_ok(b.sheet)) {
      out.push_back({"dangling reference", "branch " + who + " names a missing curve or sheet"});
      continue;
    }
    const auto& c = d.curve(b.curve);
    if (c.over != b.sheet || c.u_plus != b.sheet || c.u_minus != b.sheet)
      out.push_back({"branch-curve identity", "branch " + who + ": curve " + tag('c', b.curve) +
                                                  " must have over=uplus=uminus=" +
                                                  tag('s', b.sheet)});
  }
  return out;
}

Diagram read_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

std::string fixture_dir() {
  if (const char* env = std::getenv("ROSEMAN_FIXTURES")) return env;
  return ROSEMAN_FIXTURE_DIR;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(fixture_dir(), ec))
    if (entry.path().extension() == ".skd") names.push_back(entry.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

Diagram load_fixture(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"unknot_sphere", "unknot"}, {"spun_trefoil", "d0_23"}, {"twist2_spun_trefoil", "d2_23"}};
  auto alias = aliases.find(name);
  const std::string& stem = alias == aliases.end() ? name : alias->second;
  auto path = std::filesystem::path(fixture_dir()) / (stem + ".skd");
  if (!std::filesystem::exists(path)) throw std::invalid_argument("unknown fixture '" + name + "'");
  return read_diagram_file(path.string());
}

}  // namespace roseman
