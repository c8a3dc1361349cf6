#include "hyperpd/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "detail/rank.hpp"
#include "hyperpd/errors.hpp"

namespace hyperpd {

// ------------------------------------------------------------- BettiTable

BettiTable::BettiTable(std::vector<std::string> variables, int field_char)
    : variables_(std::move(variables)), field_char_(field_char) {}

void BettiTable::add(int i, Mask sigma, long long rank) {
  if (rank == 0) return;
  entries_[{i, sigma}] += rank;
}

long long BettiTable::at(int i, Mask sigma) const {
  auto it = entries_.find({i, sigma});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::pd() const {
  int pd = 0;
  for (const auto& [key, rank] : entries_) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::reg() const {
  int reg = 0;
  for (const auto& [key, rank] : entries_) reg = std::max(reg, std::popcount(key.second) - key.first);
  return reg;
}

long long BettiTable::total(int i) const {
  long long t = 0;
  for (const auto& [key, rank] : entries_) {
    if (key.first == i) t += rank;
  }
  return t;
}

long long BettiTable::graded(int i, int j) const {
  long long t = 0;
  for (const auto& [key, rank] : entries_) {
    if (key.first == i && std::popcount(key.second) == j) t += rank;
  }
  return t;
}

std::vector<long long> BettiTable::totals() const {
  std::vector<long long> out(static_cast<std::size_t>(pd()) + 1, 0);
  for (const auto& [key, rank] : entries_) out[key.first] += rank;
  return out;
}

std::string BettiTable::sigma_string(Mask sigma) const {
  if (sigma == 0) return "-";
  std::string out;
  for (std::size_t b = 0; b < variables_.size(); ++b) {
    if (sigma & (Mask{1} << b)) {
      if (!out.empty()) out += ",";
      out += variables_[b];
    }
  }
  return out;
}

namespace {

std::vector<std::pair<int, Mask>> sorted_keys(const BettiTable& t) {
  std::vector<std::pair<int, Mask>> keys;
  for (const auto& [key, rank] : t.entries()) keys.push_back(key);
  auto bits = [](Mask m) {
    std::vector<int> out;
    for (int b = 0; m; ++b, m >>= 1) {
      if (m & 1) out.push_back(b);
    }
    return out;
  };
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    const int pa = std::popcount(a.second), pb = std::popcount(b.second);
    if (pa != pb) return pa < pb;
    return bits(a.second) < bits(b.second);
  });
  return keys;
}

}  // namespace

std::string BettiTable::to_tsv() const {
  std::string out;
  for (const auto& key : sorted_keys(*this)) {
    out += std::to_string(key.first) + "\t" + sigma_string(key.second) + "\t" +
           std::to_string(entries_.at(key)) + "\n";
  }
  return out;
}

std::string BettiTable::to_json(int indent) const {
  nlohmann::ordered_json doc;
  doc["field"] = field_char_;
  doc["variables"] = variables_;
  doc["pd"] = pd();
  doc["reg"] = reg();
  doc["totals"] = totals();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& key : sorted_keys(*this)) {
    std::vector<std::string> sigma;
    for (std::size_t b = 0; b < variables_.size(); ++b) {
      if (key.second & (Mask{1} << b)) sigma.push_back(variables_[b]);
    }
    nlohmann::ordered_json e;
    e["i"] = key.first;
    e["sigma"] = sigma;
    e["rank"] = entries_.at(key);
    entries.push_back(e);
  }
  doc["entries"] = entries;
  return doc.dump(indent);
}

// ------------------------------------------------------------- shared setup

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

struct Prepared {
  std::vector<std::string> variables;  // only variables that occur
  std::vector<Mask> generators;        // minimal generators as masks
};

Prepared prepare(const MonomialIdeal& ideal, int field_char, int max_variables) {
  if (field_char != 0 && !is_prime(field_char)) {
    throw PreconditionError("field characteristic must be 0 or a prime");
  }
  if (ideal.empty()) throw PreconditionError("the zero ideal is not supported");
  if (ideal.is_unit()) throw PreconditionError("the unit ideal is not supported");
  auto minimal = prune_redundant(ideal);
  Prepared out;
  for (const auto& v : minimal.variables()) {
    bool used = std::any_of(minimal.generators().begin(), minimal.generators().end(),
                            [&](const Monomial& g) { return g.contains(v); });
    if (used) out.variables.push_back(v);
  }
  const int n = static_cast<int>(out.variables.size());
  if (n > max_variables || n > 30) {
    throw BudgetExceeded("oracle needs " + std::to_string(n) + " variables; limit is " +
                         std::to_string(std::min(max_variables, 30)));
  }
  std::unordered_map<std::string, int> index;
  for (int b = 0; b < n; ++b) index[out.variables[b]] = b;
  for (const auto& g : minimal.generators()) {
    Mask m = 0;
    for (const auto& v : g.support()) m |= Mask{1} << index.at(v);
    out.generators.push_back(m);
  }
  return out;
}

std::vector<Mask> lcm_lattice(const std::vector<Mask>& gens) {
  std::unordered_set<Mask> seen{0};
  std::vector<Mask> elements{0};
  for (Mask g : gens) {
    const std::size_t size = elements.size();
    for (std::size_t i = 0; i < size; ++i) {
      Mask joined = elements[i] | g;
      if (seen.insert(joined).second) elements.push_back(joined);
    }
  }
  std::sort(elements.begin(), elements.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return elements;
}

/// Reduced homology ranks of a simplicial complex given by its faces,
/// grouped by dimension (faces_by_dim[d+1] holds the d-faces; index 0 holds
/// the empty face). Returns h with h[d+1] = dim H~_d.
template <class Face, class Boundary>
std::vector<long long> reduced_homology(const std::vector<std::vector<Face>>& faces_by_dim, Boundary boundary,
                                        int field_char) {
  const std::size_t levels = faces_by_dim.size();
  // rank of d_{level}: C_level -> C_{level-1}, level = d+1 in face-list indexing.
  std::vector<long long> ranks(levels + 1, 0);
  for (std::size_t level = 1; level < levels; ++level) {
    std::map<Face, int> index;
    for (std::size_t j = 0; j < faces_by_dim[level - 1].size(); ++j) index.emplace(faces_by_dim[level - 1][j], j);
    std::vector<detail::SparseRow> rows;
    rows.reserve(faces_by_dim[level].size());
    for (const auto& face : faces_by_dim[level]) {
      detail::SparseRow row;
      boundary(face, [&](const Face& sub, int sign) { row.emplace_back(index.at(sub), sign); });
      std::sort(row.begin(), row.end());
      rows.push_back(std::move(row));
    }
    ranks[level] = static_cast<long long>(detail::matrix_rank(std::move(rows), field_char));
  }
  std::vector<long long> h(levels, 0);
  for (std::size_t level = 0; level < levels; ++level) {
    h[level] = static_cast<long long>(faces_by_dim[level].size()) - ranks[level] - ranks[level + 1];
  }
  return h;
}

}  // namespace

// ------------------------------------------------------------ Hochster scan

BettiTable betti_table(const MonomialIdeal& ideal, int field_char, const OracleOptions& options) {
  const auto prep = prepare(ideal, field_char, options.max_variables);
  const auto& gens = prep.generators;
  const int n = static_cast<int>(prep.variables.size());
  BettiTable table(prep.variables, field_char);

  std::vector<Mask> sigmas;
  if (options.prune) {
    sigmas = lcm_lattice(gens);
  } else {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) sigmas.push_back(static_cast<Mask>(m));
  }

  auto mask_boundary = [](Mask face, auto&& emit) {
    int j = 0;
    for (Mask rest = face; rest; rest &= rest - 1, ++j) {
      emit(face & ~(rest & -rest), (j % 2 == 0) ? 1 : -1);
    }
  };

  for (Mask sigma : sigmas) {
    const int size = std::popcount(sigma);
    const bool has_generator =
        std::any_of(gens.begin(), gens.end(), [&](Mask g) { return (g & ~sigma) == 0; });
    if (!has_generator) {
      // The restriction is a full simplex: acyclic unless sigma is empty.
      if (sigma == 0) table.add(0, 0, 1);
      continue;
    }
    std::vector<int> bits;
    for (int b = 0; b < n; ++b) {
      if (sigma & (Mask{1} << b)) bits.push_back(b);
    }
    std::vector<std::vector<Mask>> faces(static_cast<std::size_t>(size) + 1);
    // Depth-first over subsets in increasing bit order; a set containing a
    // generator has no faces above it.
    std::vector<std::pair<Mask, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
      auto [face, next] = stack.back();
      stack.pop_back();
      faces[std::popcount(face)].push_back(face);
      for (std::size_t t = next; t < bits.size(); ++t) {
        const Mask bit = Mask{1} << bits[t];
        const Mask grown = face | bit;
        bool blocked = false;
        for (Mask g : gens) {
          if ((g & bit) && (g & ~grown) == 0) {
            blocked = true;
            break;
          }
        }
        if (!blocked) stack.emplace_back(grown, t + 1);
      }
    }
    while (!faces.empty() && faces.back().empty()) faces.pop_back();
    auto h = reduced_homology(faces, mask_boundary, field_char);
    for (std::size_t level = 0; level < h.size(); ++level) {
      const int d = static_cast<int>(level) - 1;
      table.add(size - d - 1, sigma, h[level]);
    }
  }
  return table;
}

std::pair<int, int> pd_reg(const MonomialIdeal& ideal, int field_char, const OracleOptions& options) {
  auto table = betti_table(ideal, field_char, options);
  return {table.pd(), table.reg()};
}

// ---------------------------------------------------------- lcm-lattice scan

BettiTable lcm_lattice_betti(const MonomialIdeal& ideal, int field_char, const OracleOptions& options) {
  const auto prep = prepare(ideal, field_char, options.max_variables);
  BettiTable table(prep.variables, field_char);
  table.add(0, 0, 1);
  const auto lattice = lcm_lattice(prep.generators);

  using Chain = std::vector<int>;
  auto chain_boundary = [](const Chain& chain, auto&& emit) {
    for (std::size_t j = 0; j < chain.size(); ++j) {
      Chain sub;
      sub.reserve(chain.size() - 1);
      for (std::size_t t = 0; t < chain.size(); ++t) {
        if (t != j) sub.push_back(chain[t]);
      }
      emit(sub, (j % 2 == 0) ? 1 : -1);
    }
  };

  for (Mask sigma : lattice) {
    if (sigma == 0) continue;
    std::vector<Mask> below;  // open interval (0, sigma), graded order
    for (Mask t : lattice) {
      if (t != 0 && t != sigma && (t & ~sigma) == 0) below.push_back(t);
    }
    if (below.empty()) {
      table.add(1, sigma, 1);
      continue;
    }
    const int m = static_cast<int>(below.size());
    std::vector<std::vector<int>> above(m);
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        if (below[a] != below[b] && (below[a] & ~below[b]) == 0) above[a].push_back(b);
      }
    }
    std::vector<std::vector<Chain>> faces(1, std::vector<Chain>{Chain{}});
    std::vector<Chain> stack;
    for (int a = m - 1; a >= 0; --a) stack.push_back(Chain{a});
    while (!stack.empty()) {
      Chain chain = std::move(stack.back());
      stack.pop_back();
      if (faces.size() <= chain.size()) faces.resize(chain.size() + 1);
      faces[chain.size()].push_back(chain);
      for (int b : above[chain.back()]) {
        Chain longer = chain;
        longer.push_back(b);
        stack.push_back(std::move(longer));
      }
    }
    auto h = reduced_homology(faces, chain_boundary, field_char);
    for (std::size_t level = 0; level < h.size(); ++level) {
      const int d = static_cast<int>(level) - 1;
      table.add(d + 2, sigma, h[level]);
    }
  }
  return table;
}

// ------------------------------------------------------------ splitting

SplitReport check_betti_splitting(const MonomialIdeal& ideal, const std::vector<int>& v1,
                                  const std::vector<int>& v2, int field_char, const OracleOptions& options) {
  const int mu = static_cast<int>(ideal.size());
  std::vector<int> seen(static_cast<std::size_t>(mu) + 1, 0);
  for (const auto* part : {&v1, &v2}) {
    for (int v : *part) {
      if (v < 1 || v > mu) throw PreconditionError("generator index out of range");
      if (seen[v]++) throw PreconditionError("generator index listed twice");
    }
  }
  if (v1.empty() || v2.empty() || static_cast<int>(v1.size() + v2.size()) != mu) {
    throw PreconditionError("V1 and V2 must partition the generators into two non-empty parts");
  }
  auto sub = [&](const std::vector<int>& part) {
    std::vector<std::size_t> idx;
    for (int v : part) idx.push_back(static_cast<std::size_t>(v - 1));
    return ideal.subideal(idx);
  };
  const auto j = sub(v1);
  const auto k = sub(v2);
  const auto jk = intersect(j, k);

  SplitReport rep;
  std::tie(rep.pdJ, rep.regJ) = pd_reg(j, field_char, options);
  std::tie(rep.pdK, rep.regK) = pd_reg(k, field_char, options);
  const auto jk_table = betti_table(jk, field_char, options);
  rep.pdJK = jk_table.pd();
  rep.regJK = jk_table.reg();
  rep.q = rep.pdK;
  rep.r = rep.regJK;
  rep.beta_q_qr_JK = jk_table.graded(rep.q, rep.q + rep.r);
  rep.hypotheses_hold = rep.pdJ < rep.q && rep.pdJK == rep.q && rep.regK < rep.r && rep.beta_q_qr_JK != 0;
  if (rep.hypotheses_hold) rep.predicted_pd = rep.q + 1;
  return rep;
}

// ------------------------------------------------------------ K-polynomial

std::map<Mask, long long> k_polynomial(const BettiTable& table) {
  std::map<Mask, long long> poly;
  for (const auto& [key, rank] : table.entries()) {
    poly[key.second] += (key.first % 2 == 0) ? rank : -rank;
  }
  std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
  return poly;
}

std::map<Mask, long long> inclusion_exclusion_k_polynomial(const MonomialIdeal& ideal,
                                                            const std::vector<std::string>& variables) {
  const auto& gens = ideal.generators();
  if (gens.size() > 24) throw BudgetExceeded("inclusion-exclusion over more than 24 generators");
  std::vector<Mask> masks;
  for (const auto& g : gens) {
    Mask m = 0;
    for (const auto& v : g.support()) {
      auto it = std::find(variables.begin(), variables.end(), v);
      if (it == variables.end()) throw PreconditionError("variable '" + v + "' not in the table");
      m |= Mask{1} << (it - variables.begin());
    }
    masks.push_back(m);
  }
  std::map<Mask, long long> poly;
  const std::uint64_t subsets = std::uint64_t{1} << masks.size();
  for (std::uint64_t s = 0; s < subsets; ++s) {
    Mask lcm = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (s & (std::uint64_t{1} << i)) lcm |= masks[i];
    }
    poly[lcm] += (std::popcount(s) % 2 == 0) ? 1 : -1;
  }
  std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
  return poly;
}

}  // namespace hyperpd
