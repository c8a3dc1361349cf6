#include "hyperpd/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <set>

#include "hyperpd/errors.hpp"

namespace hyperpd {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct NameLess {
  bool operator()(const std::string& a, const std::string& b) const { return variable_less(a, b); }
};

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      std::string_view da = a.substr(i, ie - i);
      std::string_view db = b.substr(j, je - j);
      while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
      while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::string> support) : support_(std::move(support)) {
  for (const auto& v : support_) {
    if (v.empty()) throw PreconditionError("empty variable name in monomial");
  }
  std::sort(support_.begin(), support_.end(), NameLess{});
  auto dup = std::adjacent_find(support_.begin(), support_.end());
  if (dup != support_.end()) {
    throw PreconditionError("variable '" + *dup + "' repeated in a square-free monomial");
  }
}

bool Monomial::contains(std::string_view variable) const {
  return std::binary_search(support_.begin(), support_.end(), std::string(variable), NameLess{});
}

bool Monomial::divides(const Monomial& other) const {
  return std::includes(other.support_.begin(), other.support_.end(), support_.begin(),
                       support_.end(), NameLess{});
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  std::set_union(support_.begin(), support_.end(), other.support_.begin(), other.support_.end(),
                 std::back_inserter(out.support_), NameLess{});
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out;
  std::set_intersection(support_.begin(), support_.end(), other.support_.begin(),
                        other.support_.end(), std::back_inserter(out.support_), NameLess{});
  return out;
}

Monomial Monomial::colon(const Monomial& m) const {
  Monomial out;
  std::set_difference(support_.begin(), support_.end(), m.support_.begin(), m.support_.end(),
                      std::back_inserter(out.support_), NameLess{});
  return out;
}

Monomial Monomial::times(const Monomial& m) const {
  if (!gcd(m).is_unit()) {
    throw PreconditionError("product " + to_string(false) + " * " + m.to_string(false) +
                            " is not square-free");
  }
  return lcm(m);
}

std::string Monomial::to_string(bool juxtapose) const {
  if (support_.empty()) return "1";
  bool single = juxtapose && std::all_of(support_.begin(), support_.end(),
                                         [](const std::string& v) { return v.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i > 0 && !single) out += '*';
    out += support_[i];
  }
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  const auto n = std::min(support_.size(), other.support_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (support_[i] == other.support_[i]) continue;
    return variable_less(support_[i], other.support_[i]) ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
  }
  return support_.size() <=> other.support_.size();
}

// ----------------------------------------------------------- MonomialIdeal

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators)
    : variables_(std::move(variables)), generators_(std::move(generators)) {
  std::set<std::string> known(variables_.begin(), variables_.end());
  if (known.size() != variables_.size()) throw PreconditionError("repeated variable in variable list");
  for (const auto& g : generators_) {
    for (const auto& v : g.support()) {
      if (!known.contains(v)) {
        throw PreconditionError("generator " + g.to_string(false) + " uses unknown variable '" + v + "'");
      }
    }
  }
}

MonomialIdeal MonomialIdeal::from_generators(std::vector<Monomial> generators) {
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (const auto& g : generators) {
    for (const auto& v : g.support()) {
      if (seen.insert(v).second) vars.push_back(v);
    }
  }
  return MonomialIdeal(std::move(vars), std::move(generators));
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [](const Monomial& g) { return g.is_unit(); });
}

bool MonomialIdeal::is_minimal() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      if (i != j && generators_[i].divides(generators_[j])) return false;
    }
  }
  return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::with_generator(const Monomial& m) const {
  auto vars = variables_;
  for (const auto& v : m.support()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  auto gens = generators_;
  gens.push_back(m);
  return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal MonomialIdeal::subideal(std::span<const std::size_t> indices) const {
  std::vector<Monomial> gens;
  gens.reserve(indices.size());
  for (auto i : indices) {
    if (i >= generators_.size()) throw PreconditionError("generator index out of range");
    gens.push_back(generators_[i]);
  }
  return MonomialIdeal(variables_, std::move(gens));
}

bool MonomialIdeal::uses_single_letter_variables() const {
  return std::all_of(variables_.begin(), variables_.end(),
                     [](const std::string& v) { return v.size() == 1; });
}

std::string MonomialIdeal::to_string() const {
  const bool juxtapose = uses_single_letter_variables();
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += generators_[i].to_string(juxtapose);
  }
  out += ")";
  return out;
}

// ----------------------------------------------------------------- parsing

MonomialIdeal parse_ideal(std::string_view text) {
  // Strip comment lines, then split on commas and newlines.
  std::string body;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    auto stripped = trim(line);
    if (!stripped.empty() && stripped.front() != '#') {
      auto hash = stripped.find('#');
      body.append(stripped.substr(0, hash));
      body += '\n';
    }
    pos = end + 1;
  }
  std::string_view content = trim(body);
  if (!content.empty() && content.front() == '(') {
    if (content.back() != ')') throw ParseError("unbalanced parenthesis in ideal text");
    content = trim(content.substr(1, content.size() - 2));
  }
  const bool star_mode = content.find('*') != std::string_view::npos;

  std::vector<Monomial> gens;
  std::size_t start = 0;
  auto flush = [&](std::string_view token) {
    token = trim(token);
    if (token.empty()) return;
    std::vector<std::string> vars;
    if (star_mode) {
      std::size_t s = 0;
      while (s <= token.size()) {
        auto e = token.find('*', s);
        if (e == std::string_view::npos) e = token.size();
        auto factor = trim(token.substr(s, e - s));
        if (factor.empty()) throw ParseError("empty factor in monomial '" + std::string(token) + "'");
        for (char c : factor) {
          if (!is_identifier_char(c)) {
            throw ParseError("invalid character '" + std::string(1, c) + "' in '" + std::string(token) + "'");
          }
        }
        vars.emplace_back(factor);
        s = e + 1;
      }
    } else {
      for (char c : token) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (!std::isalpha(static_cast<unsigned char>(c))) {
          throw ParseError("invalid token '" + std::string(token) +
                           "': multi-character variables need '*' separators");
        }
        vars.emplace_back(1, c);
      }
    }
    try {
      gens.emplace_back(std::move(vars));
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("not square-free: ") + e.what());
    }
  };
  for (std::size_t i = 0; i < content.size(); ++i) {
    char c = content[i];
    if (c == ',' || c == '\n') {
      flush(content.substr(start, i - start));
      start = i + 1;
    } else if (c == '(' || c == ')') {
      throw ParseError("unexpected parenthesis in ideal text");
    }
  }
  flush(content.substr(start));
  if (gens.empty()) throw ParseError("ideal text has no generators");
  return MonomialIdeal::from_generators(std::move(gens));
}

// -------------------------------------------------------------- operations

MonomialIdeal prune_redundant(const MonomialIdeal& ideal, std::vector<int>* kept) {
  const auto& gens = ideal.generators();
  std::vector<Monomial> out;
  std::vector<int> index(gens.size(), -1);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (j == i || !gens[j].divides(gens[i])) continue;
      // Equal copies: the first one survives.
      redundant = gens[j] != gens[i] || j < i;
    }
    if (!redundant) {
      index[i] = static_cast<int>(out.size());
      out.push_back(gens[i]);
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (index[i] >= 0) continue;
    auto it = std::find(out.begin(), out.end(), gens[i]);
    if (it != out.end()) index[i] = static_cast<int>(it - out.begin());
  }
  if (kept != nullptr) *kept = std::move(index);
  return MonomialIdeal(ideal.variables(), std::move(out));
}

MonomialIdeal minimalize(const MonomialIdeal& ideal) {
  auto pruned = prune_redundant(ideal);
  auto gens = pruned.generators();
  std::sort(gens.begin(), gens.end());
  return MonomialIdeal(ideal.variables(), std::move(gens));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  auto vars = ideal.variables();
  for (const auto& v : m.support()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g.colon(m));
  return minimalize(MonomialIdeal(std::move(vars), std::move(gens)));
}

namespace {

std::vector<std::string> merged_variables(const MonomialIdeal& j, const MonomialIdeal& k) {
  auto vars = j.variables();
  for (const auto& v : k.variables()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  return vars;
}

}  // namespace

MonomialIdeal intersect(const MonomialIdeal& j, const MonomialIdeal& k) {
  std::vector<Monomial> gens;
  gens.reserve(j.size() * k.size());
  for (const auto& g : j.generators()) {
    for (const auto& h : k.generators()) gens.push_back(g.lcm(h));
  }
  return minimalize(MonomialIdeal(merged_variables(j, k), std::move(gens)));
}

MonomialIdeal ideal_sum(const MonomialIdeal& j, const MonomialIdeal& k) {
  auto gens = j.generators();
  gens.insert(gens.end(), k.generators().begin(), k.generators().end());
  return minimalize(MonomialIdeal(merged_variables(j, k), std::move(gens)));
}

MonomialIdeal scale_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  auto vars = ideal.variables();
  for (const auto& v : m.support()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g.times(m));
  return MonomialIdeal(std::move(vars), std::move(gens));
}

}  // namespace hyperpd
