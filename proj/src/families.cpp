#include "hyperpd/families.hpp"

#include <algorithm>
#include <numeric>

#include "hyperpd/errors.hpp"

namespace hyperpd {
namespace {

Hypergraph label_and_build(int mu, std::vector<std::vector<int>> sets, const std::vector<int>* extra) {
  std::sort(sets.begin(), sets.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sets.size(); ++i) edges.push_back(Edge{default_edge_label(i), sets[i], 1});
  if (extra != nullptr) edges.push_back(Edge{"F", *extra, 1});
  return Hypergraph(mu, std::move(edges));
}

std::vector<std::vector<int>> path_sets(int mu, bool first_closed, bool last_closed) {
  std::vector<std::vector<int>> sets;
  for (int v = 1; v < mu; ++v) sets.push_back({v, v + 1});
  if (first_closed) sets.push_back({1});
  // For mu = 1 both end edges are {1}; they merge into multiplicity two.
  if (last_closed) sets.push_back({mu});
  return sets;
}

std::vector<int> gaps_to_string_positions(const std::vector<int>& gaps) {
  std::vector<int> pos;
  int at = 0;
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
    at += gaps[i] + 1;
    pos.push_back(at);
  }
  return pos;
}

}  // namespace

Hypergraph open_string(int mu) {
  if (mu < 1) throw PreconditionError("open string needs mu >= 1");
  return label_and_build(mu, path_sets(mu, true, true), nullptr);
}

Hypergraph open_cycle(int mu) {
  if (mu < 3) throw PreconditionError("open cycle needs mu >= 3");
  auto sets = path_sets(mu, false, false);
  sets.push_back({1, mu});
  return label_and_build(mu, std::move(sets), nullptr);
}

Hypergraph string_with_edge(int mu, const std::vector<int>& positions, bool first_closed, bool last_closed) {
  std::vector<int> f = positions;
  std::sort(f.begin(), f.end());
  if (f.empty() || f.front() < 1 || f.back() > mu) throw PreconditionError("edge positions out of range");
  if (!first_closed && f.front() != 1) throw PreconditionError("an open first end must lie on F");
  if (!last_closed && f.back() != mu) throw PreconditionError("an open last end must lie on F");
  return label_and_build(mu, path_sets(mu, first_closed, last_closed), &f);
}

Hypergraph string_with_edge_from_gaps(const std::vector<int>& gaps, bool first_closed, bool last_closed) {
  if (gaps.size() < 2) throw PreconditionError("need at least two gaps");
  const int k = static_cast<int>(gaps.size()) - 1;
  const int mu = k + std::accumulate(gaps.begin(), gaps.end(), 0);
  return string_with_edge(mu, gaps_to_string_positions(gaps), first_closed, last_closed);
}

Hypergraph cycle_with_edge(int mu, const std::vector<int>& positions) {
  if (mu < 3) throw PreconditionError("open cycle needs mu >= 3");
  std::vector<int> f = positions;
  std::sort(f.begin(), f.end());
  if (f.size() < 2 || f.front() < 1 || f.back() > mu) throw PreconditionError("edge positions out of range");
  auto sets = path_sets(mu, false, false);
  sets.push_back({1, mu});
  return label_and_build(mu, std::move(sets), &f);
}

Hypergraph cycle_with_edge_from_gaps(const std::vector<int>& gaps) {
  // F starts at vertex 1; the last gap wraps around to it.
  const int k = static_cast<int>(gaps.size());
  const int mu = k + std::accumulate(gaps.begin(), gaps.end(), 0);
  std::vector<int> pos{1};
  for (int i = 1; i < k; ++i) pos.push_back(pos.back() + gaps[i] + 1);
  return cycle_with_edge(mu, pos);
}

Hypergraph lemma_hypergraph(LemmaCase c, const std::vector<int>& gaps) {
  lemma_case_pd(c, gaps);  // validates hypotheses
  switch (c) {
    case LemmaCase::Stringedge:
      return string_with_edge_from_gaps(gaps, true, false);
    case LemmaCase::SubStinky:
      return string_with_edge_from_gaps(gaps, false, false);
    case LemmaCase::TwoStringedge: {
      auto h = string_with_edge_from_gaps(gaps, false, false);
      return remove_vertex(h, gaps[0] + gaps[1] + 2);
    }
    case LemmaCase::StinkyString2k:
      return string_with_edge_from_gaps(gaps, true, true);
  }
  throw PreconditionError("unknown lemma case");
}

std::vector<std::vector<int>> lemma_instances(LemmaCase c, int max_mu) {
  std::vector<std::vector<int>> out;
  // Gaps n_i = base_i + 3 l_i; enumerate k and the l_i under the mu bound.
  for (int k = (c == LemmaCase::Stringedge ? 1 : 2); k <= max_mu; ++k) {
    std::vector<int> base(static_cast<std::size_t>(k) + 1, 2);
    switch (c) {
      case LemmaCase::Stringedge: base[k] = 0; break;
      case LemmaCase::TwoStringedge:
      case LemmaCase::SubStinky: base[0] = base[k] = 0; break;
      case LemmaCase::StinkyString2k: base[0] = base[k] = 1; break;
    }
    const int base_mu = k + std::accumulate(base.begin(), base.end(), 0);
    if (base_mu > max_mu) break;
    // Slots that may carry multiples of three.
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < base.size(); ++i) {
      const bool fixed_zero = base[i] == 0;
      if (!fixed_zero) free.push_back(i);
    }
    std::vector<int> extra(free.size(), 0);
    while (true) {
      std::vector<int> gaps = base;
      int mu = base_mu;
      for (std::size_t s = 0; s < free.size(); ++s) {
        gaps[free[s]] += 3 * extra[s];
        mu += 3 * extra[s];
      }
      if (mu <= max_mu) out.push_back(gaps);
      // Odometer over extra with the mu budget.
      std::size_t s = 0;
      while (s < free.size()) {
        ++extra[s];
        int used = base_mu;
        for (std::size_t t = 0; t < free.size(); ++t) used += 3 * extra[t];
        if (used <= max_mu) break;
        extra[s] = 0;
        ++s;
      }
      if (s == free.size()) break;
    }
  }
  return out;
}

MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int max_variables, int max_generators) {
  if (max_variables < 1 || max_generators < 1) throw PreconditionError("bounds must be positive");
  const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_variables));
  const int g = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_generators));
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  std::vector<Monomial> gens;
  for (int j = 0; j < g; ++j) {
    std::uint64_t mask = 0;
    while (mask == 0) mask = rng() % (std::uint64_t{1} << n);
    std::vector<std::string> support;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) support.push_back(vars[i]);
    }
    gens.emplace_back(std::move(support));
  }
  return minimalize(MonomialIdeal(vars, std::move(gens)));
}

}  // namespace hyperpd
