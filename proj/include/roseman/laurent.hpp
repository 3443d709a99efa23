#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace roseman {

using BigInt = boost::multiprecision::cpp_int;

// Element of Z[mu, mu^-1]: sorted (exponent, nonzero coefficient) pairs.
class LaurentInt {
public:
  using Term = std::pair<int, BigInt>;

  LaurentInt() = default;
  LaurentInt(long long c);  // NOLINT: implicit from integer literals is intended
  static LaurentInt monomial(BigInt c, int exponent);
  static LaurentInt mu(int exponent = 1) { return monomial(1, exponent); }

  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;
  LaurentInt unit_inverse() const;
  const std::vector<Term>& terms() const { return terms_; }
  BigInt coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentInt operator-() const;
  LaurentInt& operator+=(const LaurentInt& o);
  LaurentInt& operator-=(const LaurentInt& o);
  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
  friend bool operator==(const LaurentInt& a, const LaurentInt& b) = default;

  // Image in F_p under mu -> mu_value (mu_value must be a unit mod p).
  std::uint32_t eval_mod_p(std::uint32_t p, std::uint32_t mu_value) const;

  // "1 + 2mu^1 + -1mu^-3" style, ascending exponents; "0" for zero.
  std::string to_string() const;
  static LaurentInt parse(const std::string& text);

private:
  void normalize();
  std::vector<Term> terms_;
};

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p);
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint32_t p);

}  // namespace roseman
