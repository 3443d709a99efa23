#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace roseman {

// Declaration order equals the string order of the printed names, so the
// enum order is also the name order used for canonical terms.
enum class Kind : std::uint8_t {
  A11, A12, A13, A1b, A2, A21, A22, A23, A2b, A3, A31, A32, A33, A3b,
  Ab, Ab1, Ab2, Ab3, Abb, Stab
};

enum class Space : std::uint8_t { None, Sheet, Curve, Triple, Branch };

struct KindInfo {
  std::string_view name;
  int degree;
  int arity;
  std::array<Space, 2> args;
};

const KindInfo& kind_info(Kind k);
std::optional<Kind> kind_from_name(std::string_view name);
bool is_triple_kind(Kind k);

// A generator: kind plus up to two labels. Stab generators use a = pair
// index, b = role (1 for the upper generator, 2 for the lower) and carry
// their own degree.
struct Generator {
  Kind kind = Kind::A11;
  std::int32_t a = 0;
  std::int32_t b = 0;
  std::int32_t stab_degree = 0;

  int degree() const { return kind == Kind::Stab ? stab_degree : kind_info(kind).degree; }
  std::string name() const;
  bool mentions(Space s, int label) const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;
};

Generator make_gen(Kind k, int a = 0, int b = 0);
Generator make_stab(int index, int role, int degree);

// Parses names such as "a11(s1,s2)", "ab(b1)", "stab3.1". Stab degrees are
// not part of the name; the caller supplies them through `stab_degree`.
Generator parse_generator(std::string_view text,
                          const std::function<int(int, int)>& stab_degree = {});

char space_prefix(Space s);

struct GeneratorHash {
  std::size_t operator()(const Generator& g) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(g.kind);
    h = h * 1000003u ^ static_cast<std::uint32_t>(g.a);
    h = h * 1000003u ^ static_cast<std::uint32_t>(g.b);
    h = h * 1000003u ^ static_cast<std::uint32_t>(g.stab_degree);
    return static_cast<std::size_t>(h * 0x9E3779B97F4A7C15ull);
  }
};

}  // namespace roseman
