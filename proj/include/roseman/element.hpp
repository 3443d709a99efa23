#pragma once

#include "roseman/generator.hpp"
#include "roseman/laurent.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace roseman {

using Word = std::vector<Generator>;

int word_degree(const Word& w);

struct WordLess {
  bool operator()(const Word& x, const Word& y) const;
};

// Z[mu, mu^-1]-linear combination of words in noncommuting generators.
// Scalars sit on the left of every word; zero coefficients are never stored.
class DgaElement {
public:
  using Terms = std::map<Word, LaurentInt, WordLess>;

  DgaElement() = default;
  DgaElement(const LaurentInt& scalar);  // NOLINT: scalars embed implicitly
  static DgaElement generator(const Generator& g);
  static DgaElement word(const Word& w, const LaurentInt& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Word& w, const LaurentInt& c);
  void add_term(Word&& w, const LaurentInt& c);

  DgaElement operator-() const;
  DgaElement& operator+=(const DgaElement& o);
  DgaElement& operator-=(const DgaElement& o);
  friend DgaElement operator+(DgaElement a, const DgaElement& b) { return a += b; }
  friend DgaElement operator-(DgaElement a, const DgaElement& b) { return a -= b; }
  friend DgaElement operator*(const DgaElement& a, const DgaElement& b);
  friend DgaElement operator*(const LaurentInt& c, const DgaElement& e);
  friend bool operator==(const DgaElement& a, const DgaElement& b) { return a.terms_ == b.terms_; }

  // Common degree of all words, nullopt when inhomogeneous. Zero has degree 0.
  std::optional<int> degree() const;
  bool contains(const Generator& g) const;
  // Coefficient of the single-factor word [g].
  LaurentInt linear_coefficient(const Generator& g) const;

  // Algebra map fixing every generator except those in the table.
  DgaElement substitute(const std::function<const DgaElement*(const Generator&)>& image) const;
  DgaElement substitute(const Generator& g, const DgaElement& replacement) const;

  std::string to_string() const;

private:
  Terms terms_;
};

// Parses the serialized element grammar. Stab degrees come from `stab_degree`.
DgaElement parse_element(const std::string& text,
                         const std::function<int(int, int)>& stab_degree = {});

// The generator as an element; a11(i,i) folds to the scalar 1+mu.
DgaElement make_generator(Kind k, int a = 0, int b = 0);

std::string degree_string(const DgaElement& e);

}  // namespace roseman
