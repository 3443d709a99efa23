#include "roseman/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace roseman {

LaurentInt::LaurentInt(long long c) {
  if (c != 0) terms_.emplace_back(0, BigInt(c));
}

LaurentInt LaurentInt::monomial(BigInt c, int exponent) {
  LaurentInt r;
  if (c != 0) r.terms_.emplace_back(exponent, std::move(c));
  return r;
}

bool LaurentInt::is_unit() const {
  return terms_.size() == 1 && (terms_[0].second == 1 || terms_[0].second == -1);
}

LaurentInt LaurentInt::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("unit_inverse of non-unit " + to_string());
  return monomial(terms_[0].second, -terms_[0].first);
}

BigInt LaurentInt::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int LaurentInt::min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
int LaurentInt::max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }

LaurentInt LaurentInt::operator-() const {
  LaurentInt r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      BigInt s = a->second + b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o) { return *this += -o; }

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1)
    return LaurentInt::monomial(a.terms_[0].second * b.terms_[0].second,
                                a.terms_[0].first + b.terms_[0].first);
  std::map<int, BigInt> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  LaurentInt r;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

void LaurentInt::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  std::vector<Term> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(out);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t LaurentInt::eval_mod_p(std::uint32_t p, std::uint32_t mu_value) const {
  std::uint32_t inv = inv_mod(mu_value, p);
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    BigInt cm = c % p;
    if (cm < 0) cm += p;
    std::uint64_t cv = cm.convert_to<std::uint64_t>();
    std::uint32_t m = e >= 0 ? pow_mod(mu_value, static_cast<std::uint64_t>(e), p)
                             : pow_mod(inv, static_cast<std::uint64_t>(-(long long)e), p);
    acc = (acc + cv * m) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

std::string LaurentInt::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    if (e != 0) out += "mu^" + std::to_string(e);
  }
  return out;
}

LaurentInt LaurentInt::parse(const std::string& text) {
  LaurentInt r;
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
  if (s == "0") return r;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find('+', pos + 1);
    // a '+' directly after '^' belongs to the exponent
    while (end != std::string::npos && s[end - 1] == '^') end = s.find('+', end + 1);
    std::string piece = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    std::size_t mu = piece.find("mu^");
    try {
      if (mu == std::string::npos) {
        r.terms_.emplace_back(0, BigInt(piece));
      } else {
        std::string c = piece.substr(0, mu);
        if (c.empty() || c == "+") c = "1";
        if (c == "-") c = "-1";
        r.terms_.emplace_back(std::stoi(piece.substr(mu + 3)), BigInt(c));
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad Laurent term '" + piece + "'");
    }
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  r.normalize();
  return r;
}

}  // namespace roseman
