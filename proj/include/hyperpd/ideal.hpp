#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperpd {

/// Strict weak order on variable names that compares embedded numbers by
/// value, so that x2 < x10.
bool variable_less(std::string_view a, std::string_view b);

/**
 * A square-free monomial, stored as its support.
 *
 * The support is kept sorted with variable_less and contains no repeats.
 * The empty support is the unit monomial 1.
 */
class Monomial {
 public:
  Monomial() = default;

  /// Throws PreconditionError if a variable is repeated or empty.
  explicit Monomial(std::vector<std::string> support);

  static Monomial unit() { return Monomial(); }

  const std::vector<std::string>& support() const { return support_; }
  std::size_t degree() const { return support_.size(); }
  bool is_unit() const { return support_.empty(); }
  bool contains(std::string_view variable) const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// this / gcd(this, m), the generator of (this) : m.
  Monomial colon(const Monomial& m) const;
  /// Product with a monomial of disjoint support; throws on overlap.
  Monomial times(const Monomial& m) const;

  /// "abk" when every variable is a single character and juxtapose is set,
  /// "x1*x2" otherwise; the unit renders as "1".
  std::string to_string(bool juxtapose = true) const;

  /// Lexicographic on the sorted support.
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<std::string> support_;
};

/**
 * A square-free monomial ideal given by a list of generators over an ordered
 * variable set.
 *
 * The generator list is kept exactly as supplied; use minimalize() to obtain
 * the canonical minimal generating set. Equality compares generator lists.
 */
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators);

  /// Variables taken from the generators in first-appearance order.
  static MonomialIdeal from_generators(std::vector<Monomial> generators);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }

  bool is_unit() const;
  /// True when no generator divides another one and there are no repeats.
  bool is_minimal() const;
  /// Ideal membership for monomials.
  bool contains(const Monomial& m) const;

  /// Returns a copy with `m` appended (variables extended as needed).
  MonomialIdeal with_generator(const Monomial& m) const;
  /// Returns the ideal generated by the generators at the given 0-based indices.
  MonomialIdeal subideal(std::span<const std::size_t> indices) const;

  /// "(ab, bc, cd)" style; multi-character variables use '*'.
  std::string to_string() const;
  bool uses_single_letter_variables() const;

  bool operator==(const MonomialIdeal& other) const { return generators_ == other.generators_; }

 private:
  std::vector<std::string> variables_;
  std::vector<Monomial> generators_;
};

/**
 * Parses the ideal text format: monomials separated by commas or newlines,
 * optional enclosing parentheses, `#` comment lines. Monomials are either
 * juxtaposed single letters ("abk") or `*`-separated identifiers
 * ("x1*x2"); the `*` form is used as soon as one `*` occurs in the text.
 */
MonomialIdeal parse_ideal(std::string_view text);

/// Unique minimal generating set in canonical (lexicographic) order.
MonomialIdeal minimalize(const MonomialIdeal& ideal);

/// Drops repeated and redundant generators but keeps the survivors in their
/// original relative order. `kept` receives, for every input generator, the
/// index of the surviving generator it equals, or -1 if it was dropped.
MonomialIdeal prune_redundant(const MonomialIdeal& ideal, std::vector<int>* kept = nullptr);

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m);
MonomialIdeal intersect(const MonomialIdeal& j, const MonomialIdeal& k);
MonomialIdeal ideal_sum(const MonomialIdeal& j, const MonomialIdeal& k);
/// m * I; m must share no variable with any generator.
MonomialIdeal scale_by_monomial(const MonomialIdeal& ideal, const Monomial& m);

}  // namespace hyperpd
