#include "roseman/formula.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace roseman {

Variant Variant::parse(const std::string& tag) {
  if (tag.size() != 2 || (tag[0] != '+' && tag[0] != '-') || (tag[1] != '+' && tag[1] != '-'))
    throw std::invalid_argument("variant must be one of --, -+, +-, ++ (got '" + tag + "')");
  return Variant{tag[0] == '+', tag[1] == '+'};
}

std::vector<Variant> Variant::all() {
  return {{false, false}, {false, true}, {true, false}, {true, true}};
}

enum class Accessor : std::uint8_t {
  Id, O, Um, Up, T, Mp, Mm, Bpp, Bpm, Bmp, Bmm, Tm, Mbp, Mbm, Tbp, Tbm, Dc, Sh
};

struct AccessorInfo {
  const char* name;
  Accessor acc;
  Space from;
  Space to;
};

const AccessorInfo kAccessors[] = {
    {"o", Accessor::O, Space::Curve, Space::Sheet},
    {"um", Accessor::Um, Space::Curve, Space::Sheet},
    {"up", Accessor::Up, Space::Curve, Space::Sheet},
    {"t", Accessor::T, Space::Triple, Space::Sheet},
    {"mp", Accessor::Mp, Space::Triple, Space::Sheet},
    {"mm", Accessor::Mm, Space::Triple, Space::Sheet},
    {"bpp", Accessor::Bpp, Space::Triple, Space::Sheet},
    {"bpm", Accessor::Bpm, Space::Triple, Space::Sheet},
    {"bmp", Accessor::Bmp, Space::Triple, Space::Sheet},
    {"bmm", Accessor::Bmm, Space::Triple, Space::Sheet},
    {"tm", Accessor::Tm, Space::Triple, Space::Curve},
    {"mbp", Accessor::Mbp, Space::Triple, Space::Curve},
    {"mbm", Accessor::Mbm, Space::Triple, Space::Curve},
    {"tbp", Accessor::Tbp, Space::Triple, Space::Curve},
    {"tbm", Accessor::Tbm, Space::Triple, Space::Curve},
    {"dc", Accessor::Dc, Space::Branch, Space::Curve},
    {"sh", Accessor::Sh, Space::Branch, Space::Sheet},
};

Space var_space(char v) {
  switch (v) {
    case 'i': return Space::Sheet;
    case 'x': case 'y': return Space::Curve;
    case 'p': case 'q': return Space::Triple;
    case 'k': case 'l': return Space::Branch;
    default: return Space::None;
  }
}

struct ArgExpr {
  char var = 0;
  Accessor acc = Accessor::Id;
};

struct FormulaNode {
  enum class Type { Sum, Product, Scalar, Gen } type;
  std::vector<std::pair<int, std::shared_ptr<const FormulaNode>>> children;  // sign, child
  LaurentInt scalar;
  Kind kind = Kind::A11;
  ArgExpr args[2];
};

namespace {

struct Parser {
  std::string s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("formula: " + msg + " at offset " + std::to_string(pos) +
                                " in '" + s.substr(0, 60) + "...'");
  }
  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    ws();
    return pos < s.size() && s[pos] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  std::string ident() {
    ws();
    std::size_t st = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])))) ++pos;
    if (st == pos) fail("expected identifier");
    return s.substr(st, pos - st);
  }
  long number() {
    ws();
    std::size_t st = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (st == pos) fail("expected number");
    return std::stol(s.substr(st, pos - st));
  }

  ArgExpr arg() {
    std::string id = ident();
    ArgExpr a;
    if (id.size() == 1 && var_space(id[0]) != Space::None) {
      a.var = id[0];
      return a;
    }
    for (const auto& info : kAccessors)
      if (id == info.name) {
        expect('(');
        std::string v = ident();
        if (v.size() != 1 || var_space(v[0]) != info.from) fail("accessor " + id + " applied to " + v);
        expect(')');
        a.var = v[0];
        a.acc = info.acc;
        return a;
      }
    fail("unknown argument '" + id + "'");
  }

  static Space arg_space(const ArgExpr& a) {
    if (a.acc == Accessor::Id) return var_space(a.var);
    for (const auto& info : kAccessors)
      if (info.acc == a.acc) return info.to;
    return Space::None;
  }

  std::shared_ptr<const FormulaNode> factor() {
    ws();
    if (pos >= s.size()) fail("unexpected end");
    auto node = std::make_shared<FormulaNode>();
    if (s[pos] == '(') {
      ++pos;
      auto inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      node->type = FormulaNode::Type::Scalar;
      node->scalar = LaurentInt(number());
      return node;
    }
    std::string id = ident();
    if (id == "mu") {
      int e = 1;
      if (peek('^')) {
        ++pos;
        int sign = 1;
        if (peek('-')) {
          ++pos;
          sign = -1;
        }
        e = sign * static_cast<int>(number());
      }
      node->type = FormulaNode::Type::Scalar;
      node->scalar = LaurentInt::mu(e);
      return node;
    }
    auto kind = kind_from_name(id);
    if (!kind || *kind == Kind::Stab) fail("unknown generator '" + id + "'");
    const auto& info = kind_info(*kind);
    node->type = FormulaNode::Type::Gen;
    node->kind = *kind;
    expect('(');
    for (int i = 0; i < info.arity; ++i) {
      if (i) expect(',');
      node->args[i] = arg();
      if (arg_space(node->args[i]) != info.args[i]) fail("argument type mismatch in " + id);
    }
    expect(')');
    return node;
  }

  bool at_factor_start() {
    ws();
    return pos < s.size() && s[pos] != '+' && s[pos] != '-' && s[pos] != ')';
  }

  std::shared_ptr<const FormulaNode> product() {
    auto node = std::make_shared<FormulaNode>();
    node->type = FormulaNode::Type::Product;
    node->children.emplace_back(1, factor());
    while (at_factor_start()) node->children.emplace_back(1, factor());
    if (node->children.size() == 1) return node->children[0].second;
    return node;
  }

  std::shared_ptr<const FormulaNode> expr() {
    auto node = std::make_shared<FormulaNode>();
    node->type = FormulaNode::Type::Sum;
    int sign = 1;
    if (peek('-')) {
      ++pos;
      sign = -1;
    } else if (peek('+')) {
      ++pos;
    }
    node->children.emplace_back(sign, product());
    while (peek('+') || peek('-')) {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      node->children.emplace_back(sign, product());
    }
    return node;
  }
};

int resolve(const ArgExpr& a, const Binding& b, const Diagram& d) {
  int v = b.value[static_cast<unsigned char>(a.var)];
  switch (a.acc) {
    case Accessor::Id: return v;
    case Accessor::O: return d.curve(v).over;
    case Accessor::Um: return d.curve(v).u_minus;
    case Accessor::Up: return d.curve(v).u_plus;
    case Accessor::T: return d.triple(v).t;
    case Accessor::Mp: return d.triple(v).m_plus;
    case Accessor::Mm: return d.triple(v).m_minus;
    case Accessor::Bpp: return d.triple(v).b[0];
    case Accessor::Bpm: return d.triple(v).b[1];
    case Accessor::Bmp: return d.triple(v).b[2];
    case Accessor::Bmm: return d.triple(v).b[3];
    case Accessor::Tm: return d.triple(v).tm;
    case Accessor::Mbp: return d.triple(v).mb_plus;
    case Accessor::Mbm: return d.triple(v).mb_minus;
    case Accessor::Tbp: return d.triple(v).tb_plus;
    case Accessor::Tbm: return d.triple(v).tb_minus;
    case Accessor::Dc: return d.branch(v).curve;
    case Accessor::Sh: return d.branch(v).sheet;
  }
  return 0;
}

DgaElement eval_node(const FormulaNode& n, const Binding& b, const Diagram& d) {
  switch (n.type) {
    case FormulaNode::Type::Scalar: return DgaElement(n.scalar);
    case FormulaNode::Type::Gen:
      return make_generator(n.kind, resolve(n.args[0], b, d),
                            kind_info(n.kind).arity == 2 ? resolve(n.args[1], b, d) : 0);
    case FormulaNode::Type::Product: {
      DgaElement acc(LaurentInt(1));
      for (const auto& [sign, c] : n.children) acc = acc * eval_node(*c, b, d);
      return acc;
    }
    case FormulaNode::Type::Sum: {
      DgaElement acc;
      for (const auto& [sign, c] : n.children) {
        if (sign > 0)
          acc += eval_node(*c, b, d);
        else
          acc -= eval_node(*c, b, d);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace

Formula parse_formula(const std::string& entry) {
  Parser ps{entry};
  Formula f;
  f.source = entry;
  std::string name = ps.ident();
  auto kind = kind_from_name(name);
  if (!kind || *kind == Kind::Stab) ps.fail("unknown generator kind '" + name + "'");
  f.kind = *kind;
  const auto& info = kind_info(*kind);
  ps.expect('(');
  for (int i = 0; i < info.arity; ++i) {
    if (i) ps.expect(',');
    std::string v = ps.ident();
    if (v.size() != 1 || var_space(v[0]) != info.args[i]) ps.fail("bad header variable " + v);
    f.vars.push_back(v[0]);
  }
  ps.expect(')');
  ps.expect('=');
  f.body = ps.expr();
  ps.ws();
  if (ps.pos != ps.s.size()) ps.fail("trailing input");
  return f;
}

DgaElement evaluate(const Formula& f, const Binding& b, const Diagram& d) {
  return eval_node(*f.body, b, d);
}

TableSet TableSet::from_text(const std::string& text) {
  TableSet t;
  std::istringstream in(text);
  std::string line, current;
  auto flush = [&]() {
    if (current.empty()) return;
    auto close = current.find(']');
    if (current[0] != '[' || close == std::string::npos)
      throw std::invalid_argument("table entry must start with [variant]: " + current.substr(0, 40));
    std::string tag = current.substr(1, close - 1);
    Variant::parse(tag);
    Formula f = parse_formula(current.substr(close + 1));
    if (!t.entries_.emplace(std::make_pair(tag, f.kind), f).second)
      throw std::invalid_argument("duplicate table entry [" + tag + "] " +
                                  std::string(kind_info(f.kind).name));
    current.clear();
  };
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) continue;
    if (line[0] == '[') {
      flush();
      current = line;
    } else {
      if (current.empty()) throw std::invalid_argument("continuation line without entry");
      current += ' ' + line;
    }
  }
  flush();
  return t;
}

const TableSet& TableSet::standard() {
  static const TableSet t = from_text(standard_table_text());
  return t;
}

bool TableSet::has_own_entry(Variant v, Kind kind) const {
  return entries_.count({v.tag(), kind}) != 0;
}

const Formula& TableSet::lookup(Variant v, Kind kind) const {
  auto it = entries_.find({v.tag(), kind});
  if (it == entries_.end() && !is_triple_kind(kind)) it = entries_.find({"--", kind});
  if (it == entries_.end())
    throw std::out_of_range("no differential entry for " + std::string(kind_info(kind).name) +
                            " in variant " + v.tag());
  return it->second;
}

TableSet TableSet::with_entry(const std::string& entry) const {
  TableSet single = from_text(entry);
  TableSet out = *this;
  for (auto& [key, f] : single.entries_) out.entries_.insert_or_assign(key, f);
  return out;
}

std::string TableSet::text() const {
  std::string out;
  for (const auto& [key, f] : entries_) out += "[" + key.first + "] " + f.source + "\n";
  return out;
}

}  // namespace roseman
