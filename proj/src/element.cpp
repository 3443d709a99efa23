#include "roseman/element.hpp"

#include <stdexcept>

namespace roseman {

int word_degree(const Word& w) {
  int d = 0;
  for (const auto& g : w) d += g.degree();
  return d;
}

bool WordLess::operator()(const Word& x, const Word& y) const {
  int dx = word_degree(x), dy = word_degree(y);
  if (dx != dy) return dx < dy;
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

DgaElement::DgaElement(const LaurentInt& scalar) {
  if (!scalar.is_zero()) terms_.emplace(Word{}, scalar);
}

DgaElement DgaElement::generator(const Generator& g) { return word(Word{g}); }

DgaElement DgaElement::word(const Word& w, const LaurentInt& c) {
  DgaElement e;
  e.add_term(w, c);
  return e;
}

void DgaElement::add_term(const Word& w, const LaurentInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DgaElement::add_term(Word&& w, const LaurentInt& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DgaElement DgaElement::operator-() const {
  DgaElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

DgaElement& DgaElement::operator+=(const DgaElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

DgaElement& DgaElement::operator-=(const DgaElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

DgaElement operator*(const DgaElement& a, const DgaElement& b) {
  DgaElement r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(std::move(w), ca * cb);
    }
  return r;
}

DgaElement operator*(const LaurentInt& c, const DgaElement& e) {
  DgaElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : e.terms_) r.terms_.emplace_hint(r.terms_.end(), w, c * x);
  return r;
}

std::optional<int> DgaElement::degree() const {
  if (terms_.empty()) return 0;
  int d = word_degree(terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (word_degree(w) != d) return std::nullopt;
  return d;
}

bool DgaElement::contains(const Generator& g) const {
  for (const auto& [w, c] : terms_)
    for (const auto& f : w)
      if (f == g) return true;
  return false;
}

LaurentInt DgaElement::linear_coefficient(const Generator& g) const {
  auto it = terms_.find(Word{g});
  return it == terms_.end() ? LaurentInt{} : it->second;
}

DgaElement DgaElement::substitute(
    const std::function<const DgaElement*(const Generator&)>& image) const {
  DgaElement out;
  for (const auto& [w, c] : terms_) {
    bool touched = false;
    for (const auto& f : w)
      if (image(f)) {
        touched = true;
        break;
      }
    if (!touched) {
      out.add_term(w, c);
      continue;
    }
    DgaElement acc(c);
    Word pending;
    for (const auto& f : w) {
      const DgaElement* rep = image(f);
      if (!rep) {
        pending.push_back(f);
        continue;
      }
      if (!pending.empty()) {
        acc = acc * DgaElement::word(pending);
        pending.clear();
      }
      acc = acc * *rep;
      if (acc.is_zero()) break;
    }
    if (!pending.empty() && !acc.is_zero()) acc = acc * DgaElement::word(pending);
    out += acc;
  }
  return out;
}

DgaElement DgaElement::substitute(const Generator& g, const DgaElement& replacement) const {
  return substitute([&](const Generator& f) { return f == g ? &replacement : nullptr; });
}

std::string DgaElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (!w.empty()) {
      out += ' ';
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '*';
        out += w[i].name();
      }
    }
  }
  return out;
}

DgaElement parse_element(const std::string& text, const std::function<int(int, int)>& stab_degree) {
  DgaElement e;
  std::size_t pos = 0;
  auto skip = [&]() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip();
  if (text.compare(pos, std::string::npos, "0") == 0) return e;
  while (pos < text.size()) {
    skip();
    if (pos >= text.size() || text[pos] != '(')
      throw std::invalid_argument("element: expected '(' at offset " + std::to_string(pos));
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("element: unclosed coefficient");
    LaurentInt c = LaurentInt::parse(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    Word w;
    if (pos < text.size() && text[pos] == ' ' && pos + 1 < text.size() && text[pos + 1] != '+') {
      ++pos;
      std::size_t end = text.find(' ', pos);
      std::string word = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
      pos = end == std::string::npos ? text.size() : end;
      std::size_t start = 0;
      while (start <= word.size()) {
        std::size_t star = word.find('*', start);
        std::string name = word.substr(start, star == std::string::npos ? std::string::npos
                                                                        : star - start);
        w.push_back(parse_generator(name, stab_degree));
        if (star == std::string::npos) break;
        start = star + 1;
      }
    }
    e.add_term(std::move(w), c);
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '+') throw std::invalid_argument("element: expected ' + ' between terms");
    ++pos;
  }
  return e;
}

DgaElement make_generator(Kind k, int a, int b) {
  if (k == Kind::A11 && a == b) return DgaElement(LaurentInt(1) + LaurentInt::mu());
  return DgaElement::generator(make_gen(k, a, b));
}

std::string degree_string(const DgaElement& e) {
  auto d = e.degree();
  return d ? std::to_string(*d) : std::string("inhomogeneous");
}

}  // namespace roseman
