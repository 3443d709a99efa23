#include "roseman/generator.hpp"

#include <stdexcept>
#include <string>

namespace roseman {

namespace {

constexpr Space N = Space::None, S = Space::Sheet, C = Space::Curve, T = Space::Triple,
                B = Space::Branch;

const KindInfo kTable[] = {
    {"a11", 0, 2, {S, S}}, {"a12", 1, 2, {S, C}}, {"a13", 2, 2, {S, T}},
    {"a1b", 2, 2, {S, B}}, {"a2", 2, 1, {C, N}},  {"a21", 1, 2, {C, S}},
    {"a22", 2, 2, {C, C}}, {"a23", 3, 2, {C, T}}, {"a2b", 3, 2, {C, B}},
    {"a3", 3, 1, {T, N}},  {"a31", 2, 2, {T, S}}, {"a32", 3, 2, {T, C}},
    {"a33", 4, 2, {T, T}}, {"a3b", 4, 2, {T, B}}, {"ab", 3, 1, {B, N}},
    {"ab1", 2, 2, {B, S}}, {"ab2", 3, 2, {B, C}}, {"ab3", 4, 2, {B, T}},
    {"abb", 4, 2, {B, B}}, {"stab", 0, 0, {N, N}},
};

int parse_label(std::string_view s, char prefix) {
  if (s.size() < 2 || s[0] != prefix) throw std::invalid_argument("bad label");
  int v = 0;
  for (char ch : s.substr(1)) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("bad label");
    v = v * 10 + (ch - '0');
  }
  return v;
}

}  // namespace

const KindInfo& kind_info(Kind k) { return kTable[static_cast<int>(k)]; }

std::optional<Kind> kind_from_name(std::string_view name) {
  for (int i = 0; i < static_cast<int>(std::size(kTable)); ++i)
    if (kTable[i].name == name) return static_cast<Kind>(i);
  return std::nullopt;
}

bool is_triple_kind(Kind k) {
  const auto& info = kind_info(k);
  return info.args[0] == Space::Triple || info.args[1] == Space::Triple;
}

char space_prefix(Space s) {
  switch (s) {
    case Space::Sheet: return 's';
    case Space::Curve: return 'c';
    case Space::Triple: return 't';
    case Space::Branch: return 'b';
    default: return '?';
  }
}

Generator make_gen(Kind k, int a, int b) {
  Generator g;
  g.kind = k;
  g.a = a;
  g.b = kind_info(k).arity == 2 ? b : 0;
  return g;
}

Generator make_stab(int index, int role, int degree) {
  Generator g;
  g.kind = Kind::Stab;
  g.a = index;
  g.b = role;
  g.stab_degree = degree;
  return g;
}

std::string Generator::name() const {
  if (kind == Kind::Stab) return "stab" + std::to_string(a) + "." + std::to_string(b);
  const auto& info = kind_info(kind);
  std::string out(info.name);
  out += '(';
  out += space_prefix(info.args[0]);
  out += std::to_string(a);
  if (info.arity == 2) {
    out += ',';
    out += space_prefix(info.args[1]);
    out += std::to_string(b);
  }
  out += ')';
  return out;
}

bool Generator::mentions(Space s, int label) const {
  if (kind == Kind::Stab) return false;
  const auto& info = kind_info(kind);
  if (info.args[0] == s && a == label) return true;
  return info.arity == 2 && info.args[1] == s && b == label;
}

Generator parse_generator(std::string_view text, const std::function<int(int, int)>& stab_degree) {
  auto fail = [&]() -> Generator {
    throw std::invalid_argument("bad generator name '" + std::string(text) + "'");
  };
  if (text.starts_with("stab")) {
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return fail();
    int idx = 0, role = 0;
    try {
      idx = std::stoi(std::string(text.substr(4, dot - 4)));
      role = std::stoi(std::string(text.substr(dot + 1)));
    } catch (const std::exception&) {
      return fail();
    }
    if (role != 1 && role != 2) return fail();
    int deg = stab_degree ? stab_degree(idx, role) : 0;
    return make_stab(idx, role, deg);
  }
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') return fail();
  auto kind = kind_from_name(text.substr(0, open));
  if (!kind || *kind == Kind::Stab) return fail();
  const auto& info = kind_info(*kind);
  std::string_view inner = text.substr(open + 1, text.size() - open - 2);
  auto comma = inner.find(',');
  try {
    if (info.arity == 1) {
      if (comma != std::string_view::npos) return fail();
      return make_gen(*kind, parse_label(inner, space_prefix(info.args[0])));
    }
    if (comma == std::string_view::npos) return fail();
    return make_gen(*kind, parse_label(inner.substr(0, comma), space_prefix(info.args[0])),
                    parse_label(inner.substr(comma + 1), space_prefix(info.args[1])));
  } catch (const std::invalid_argument&) {
    return fail();
  }
}

}  // namespace roseman
