#include "hyperpd/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "hyperpd/classify.hpp"
#include "hyperpd/errors.hpp"
#include "hyperpd/families.hpp"
#include "hyperpd/oracle.hpp"

namespace hyperpd {

std::string family_name(Family f) {
  switch (f) {
    case Family::Strings: return "strings";
    case Family::Cycles: return "cycles";
    case Family::StringEdge: return "string-edge";
    case Family::CycleEdge: return "cycle-edge";
    case Family::Lemmas: return "lemmas";
    case Family::Splitting: return "splitting";
    case Family::Reductions: return "reductions";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto f : {Family::Strings, Family::Cycles, Family::StringEdge, Family::CycleEdge, Family::Lemmas,
                 Family::Splitting, Family::Reductions}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::optional<LemmaCase> parse_lemma(std::string_view name) {
  for (auto c : {LemmaCase::Stringedge, LemmaCase::TwoStringedge, LemmaCase::SubStinky,
                 LemmaCase::StinkyString2k}) {
    if (lemma_name(c) == name) return c;
  }
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string ints(const std::vector<int>& xs, const char* open = "(", const char* close = ")") {
  std::string out = open;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + close;
}

std::vector<int> mask_positions(std::uint32_t mask) {
  std::vector<int> pos;
  for (int b = 0; mask; ++b, mask >>= 1) {
    if (mask & 1) pos.push_back(b + 1);
  }
  return pos;
}

std::uint32_t rotate_reflect(std::uint32_t mask, int mu, int shift, bool reflect) {
  std::uint32_t out = 0;
  for (int v = 0; v < mu; ++v) {
    if (!(mask & (1u << v))) continue;
    int w = reflect ? (shift - v + 2 * mu) % mu : (v + shift) % mu;
    out |= 1u << w;
  }
  return out;
}

std::uint32_t dihedral_min(std::uint32_t mask, int mu) {
  std::uint32_t best = mask;
  for (int s = 0; s < mu; ++s) {
    best = std::min(best, rotate_reflect(mask, mu, s, false));
    best = std::min(best, rotate_reflect(mask, mu, s, true));
  }
  return best;
}

std::vector<int> string_gaps(int mu, const std::vector<int>& pos) { return string_config(mu, pos, true, true).gaps; }
std::vector<int> cycle_gaps(int mu, const std::vector<int>& pos) { return cycle_config(mu, pos).gaps; }

class Runner {
 public:
  explicit Runner(const VerifyBounds& b) : bounds_(b), rng_(b.seed) {
    oracle_.max_variables = b.budget;
  }

  std::pair<int, int> oracle(const Hypergraph& h) {
    return pd_reg(to_ideal(h, true), bounds_.field_char, oracle_);
  }
  std::pair<int, int> oracle(const MonomialIdeal& i) { return pd_reg(i, bounds_.field_char, oracle_); }

  void compare(const std::string& instance, int formula, int oracle_pd, const std::string& note = "") {
    ++out.instances;
    if (formula != oracle_pd) out.mismatches.push_back({instance, formula, oracle_pd, note});
  }
  void flag(const std::string& instance, int formula, int oracle_pd, const std::string& note) {
    out.mismatches.push_back({instance, formula, oracle_pd, note});
  }

  void strings() {
    for (int mu = 1; mu <= bounds_.max_mu; ++mu) {
      auto [pd, reg] = oracle(open_string(mu));
      std::string name = "open-string mu=" + std::to_string(mu);
      compare(name, pd_open_string(mu), pd);
      if (reg != reg_open_string(mu)) flag(name, reg_open_string(mu), reg, "reg");
    }
  }

  void cycles() {
    for (int mu = 3; mu <= bounds_.max_mu; ++mu) {
      compare("open-cycle mu=" + std::to_string(mu), pd_open_cycle(mu), oracle(open_cycle(mu)).first);
    }
  }

  void string_edge_instance(int mu, const std::vector<int>& pos) {
    const auto gaps = string_gaps(mu, pos);
    const auto h = string_with_edge(mu, pos);
    const std::string name = "string-edge mu=" + std::to_string(mu) + " F=" + ints(pos, "{", "}") + " gaps=" + ints(gaps);
    const auto formula = pd_string_with_edge(gaps);
    if (formula.case_tag == "jump") ++out.stats["jump"];
    const int pd = oracle(h).first;
    compare(name, formula.pd, pd);
    auto cfg = classify_shape(h);
    auto reversed = std::vector<int>(gaps.rbegin(), gaps.rend());
    if (cfg.kind != ShapeKind::StringWithEdge || (cfg.gaps != gaps && cfg.gaps != reversed)) {
      flag(name, formula.pd, pd, "classify: " + shape_to_json(cfg));
    }
    auto automatic = pd_auto(h, {bounds_.budget, bounds_.field_char});
    if (automatic.method != "formula:string-with-edge" || automatic.pd != pd) {
      flag(name, automatic.pd, pd, "pd_auto method " + automatic.method);
    }
  }

  void string_edge() {
    for (int mu = 2; mu <= bounds_.max_mu; ++mu) {
      for (std::uint32_t mask = 0; mask < (1u << mu); ++mask) {
        if (std::popcount(mask) < 2) continue;
        auto pos = mask_positions(mask);
        if (string_edge_is_union(string_gaps(mu, pos))) continue;
        string_edge_instance(mu, pos);
      }
    }
    sample(false);
  }

  void cycle_edge_instance(int mu, const std::vector<int>& pos) {
    const auto gaps = cycle_gaps(mu, pos);
    const auto h = cycle_with_edge(mu, pos);
    const std::string name = "cycle-edge mu=" + std::to_string(mu) + " F=" + ints(pos, "{", "}") + " gaps=" + ints(gaps);
    const int formula = pd_cycle_with_edge(gaps).pd;
    const int pd = oracle(h).first;
    compare(name, formula, pd);
    auto cfg = classify_shape(h);
    if (cfg.kind != ShapeKind::CycleWithEdge || cfg.k() != static_cast<int>(pos.size())) {
      flag(name, formula, pd, "classify: " + shape_to_json(cfg));
    }
  }

  void cycle_edge() {
    for (int mu = 3; mu <= bounds_.max_mu; ++mu) {
      for (std::uint32_t mask = 0; mask < (1u << mu); ++mask) {
        if (std::popcount(mask) < 2 || dihedral_min(mask, mu) != mask) continue;
        auto pos = mask_positions(mask);
        if (cycle_edge_is_union(cycle_gaps(mu, pos))) continue;
        cycle_edge_instance(mu, pos);
      }
    }
    sample(true);
  }

  /// Distinct random admissible position sets, spread evenly over sample_mus.
  void sample(bool cycle) {
    if (bounds_.samples <= 0 || bounds_.sample_mus.empty()) return;
    std::set<std::pair<int, std::uint32_t>> seen;
    const int per_mu = (bounds_.samples + static_cast<int>(bounds_.sample_mus.size()) - 1) /
                       static_cast<int>(bounds_.sample_mus.size());
    for (int mu : bounds_.sample_mus) {
      if (mu < 3 || mu > 30) throw PreconditionError("sample mu must lie in 3..30");
      int drawn = 0;
      for (int attempt = 0; drawn < per_mu && attempt < 200 * per_mu; ++attempt) {
        std::uint32_t mask = static_cast<std::uint32_t>(rng_() & ((std::uint64_t{1} << mu) - 1));
        if (std::popcount(mask) < 2) continue;
        if (cycle) mask = dihedral_min(mask, mu);
        auto pos = mask_positions(mask);
        const bool is_union = cycle ? cycle_edge_is_union(cycle_gaps(mu, pos))
                                    : string_edge_is_union(string_gaps(mu, pos));
        if (is_union || !seen.insert({mu, mask}).second) continue;
        ++drawn;
        ++out.stats["sampled"];
        if (cycle) cycle_edge_instance(mu, pos);
        else string_edge_instance(mu, pos);
      }
    }
  }

  void lemmas() {
    std::vector<LemmaCase> cases;
    if (bounds_.lemma) cases.push_back(*bounds_.lemma);
    else cases = {LemmaCase::Stringedge, LemmaCase::TwoStringedge, LemmaCase::SubStinky, LemmaCase::StinkyString2k};
    for (auto c : cases) {
      for (const auto& gaps : lemma_instances(c, bounds_.max_mu)) {
        const auto h = lemma_hypergraph(c, gaps);
        const auto expected = lemma_case_pd(c, gaps);
        auto [pd, reg] = oracle(h);
        const std::string name = lemma_name(c) + " gaps=" + ints(gaps);
        compare(name, expected.pd, pd);
        ++out.stats[lemma_name(c)];
        if (expected.reg_upper_bound && reg > *expected.reg_upper_bound) {
          flag(name, *expected.reg_upper_bound, reg, "reg exceeds bound");
        }
      }
    }
  }

  void split_instance(const std::string& name, const MonomialIdeal& ideal, const std::vector<int>& v1) {
    std::vector<int> v2;
    for (int j = 1; j <= static_cast<int>(ideal.size()); ++j) {
      if (std::find(v1.begin(), v1.end(), j) == v1.end()) v2.push_back(j);
    }
    auto rep = check_betti_splitting(ideal, v1, v2, bounds_.field_char, oracle_);
    ++out.instances;
    if (!rep.hypotheses_hold) return;
    ++out.stats["hypotheses_hold"];
    const int pd = oracle(ideal).first;
    if (pd != *rep.predicted_pd) flag(name + " V1=" + ints(v1, "{", "}"), *rep.predicted_pd, pd, "split");
  }

  void splitting() {
    for (const auto& gaps : lemma_instances(LemmaCase::SubStinky, bounds_.max_mu)) {
      const auto h = lemma_hypergraph(LemmaCase::SubStinky, gaps);
      split_instance("substinky gaps=" + ints(gaps), to_ideal(h), {gaps[0] + gaps[1] + 2});
    }
    for (int s = 0; s < bounds_.samples; ++s) {
      auto ideal = random_squarefree_ideal(rng_, 6, 6);
      if (ideal.size() < 2) continue;
      for (int j = 1; j <= static_cast<int>(ideal.size()); ++j) {
        split_instance("random " + ideal.to_string(), ideal, {j});
      }
    }
  }

  void reduction_instance(const std::string& name, const Hypergraph& h) {
    const int pd = oracle(h).first;
    for (const auto& b : find_branches(h)) {
      const auto n = b.branch.size();
      if (n % 3 == 0) continue;
      const auto reduced = n % 3 == 1 ? colon_by_edge(h, b.joining_edge) : remove_vertex(h, b.hub);
      compare(name + " hub=" + std::to_string(b.hub) + " n=" + std::to_string(n), oracle(reduced).first, pd,
              n % 3 == 1 ? "H:E" : "H_w");
    }
  }

  void reductions() {
    // Spiders: an open or closed hub with three or four closed-leaf legs.
    for (int legs = 3; legs <= 4; ++legs) {
      std::vector<int> len(legs, 1);
      while (true) {
        int mu = 1;
        for (int l : len) mu += l;
        if (mu <= bounds_.max_mu && std::is_sorted(len.begin(), len.end())) {
          for (bool hub_closed : {false, true}) {
            std::vector<Edge> edges;
            int next = 2;
            for (int l : len) {
              int prev = 1;
              for (int i = 0; i < l; ++i, ++next) {
                edges.push_back({"", {prev, next}, 1});
                prev = next;
              }
              edges.push_back({"", {prev}, 1});
            }
            if (hub_closed) edges.push_back({"", {1}, 1});
            for (std::size_t i = 0; i < edges.size(); ++i) edges[i].label = default_edge_label(i);
            reduction_instance("spider legs=" + ints(len) + (hub_closed ? " closed-hub" : ""),
                               Hypergraph(mu, edges));
          }
        }
        std::size_t s = 0;
        while (s < len.size()) {
          if (++len[s] <= bounds_.max_mu) break;
          len[s] = 1;
          ++s;
        }
        if (s == len.size()) break;
      }
    }
    // Union-edge removal on random ideals.
    for (int s = 0; s < bounds_.samples; ++s) {
      auto ideal = random_squarefree_ideal(rng_, 7, 7);
      const auto h = from_ideal(ideal);
      const auto reduced = remove_union_edges(h);
      compare("union-removal " + ideal.to_string(), oracle(reduced).first, oracle(ideal).first, "remove_union_edges");
    }
  }

  VerifyOutcome out;

 private:
  VerifyBounds bounds_;
  std::mt19937_64 rng_;
  OracleOptions oracle_;
};

}  // namespace

VerifyOutcome verify_family(Family family, const VerifyBounds& bounds) {
  if (bounds.max_mu < 1 || bounds.max_mu > 30) throw PreconditionError("max-mu must lie in 1..30");
  const auto start = Clock::now();
  Runner run(bounds);
  run.out.family = family_name(family);
  switch (family) {
    case Family::Strings: run.strings(); break;
    case Family::Cycles: run.cycles(); break;
    case Family::StringEdge: run.string_edge(); break;
    case Family::CycleEdge: run.cycle_edge(); break;
    case Family::Lemmas: run.lemmas(); break;
    case Family::Splitting: run.splitting(); break;
    case Family::Reductions: run.reductions(); break;
  }
  run.out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return run.out;
}

// ------------------------------------------------------------ conjecture

namespace {

/// Canonical form of a set of extra edges under the dihedral group.
std::vector<std::uint32_t> canonical_edges(const std::vector<std::uint32_t>& edges, int mu) {
  std::vector<std::uint32_t> best;
  for (int s = 0; s < mu; ++s) {
    for (bool reflect : {false, true}) {
      std::vector<std::uint32_t> image;
      for (auto e : edges) image.push_back(rotate_reflect(e, mu, s, reflect));
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = image;
    }
  }
  return best;
}

}  // namespace

ConjectureOutcome conjecture_search(int max_mu, int max_edges, int field_char, int budget, int min_edge_size) {
  if (max_mu < 3 || max_mu > 12) throw PreconditionError("conjecture search needs 3 <= max-mu <= 12");
  if (max_edges < 2) throw PreconditionError("max-edges must be at least 2");
  if (min_edge_size < 2) throw PreconditionError("min-edge-size must be at least 2");
  if (max_mu + max_edges > budget) throw BudgetExceeded("max-mu + max-edges exceeds the oracle budget");
  const auto start = Clock::now();
  ConjectureOutcome out;
  OracleOptions oracle;
  oracle.max_variables = budget;

  for (int mu = 3; mu <= max_mu; ++mu) {
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t mask = 0; mask < (1u << mu); ++mask) {
      if (std::popcount(mask) < min_edge_size) continue;
      if (!cycle_edge_is_union(cycle_gaps(mu, mask_positions(mask)))) candidates.push_back(mask);
    }
    const int expected = pd_open_cycle(mu);
    const int n = static_cast<int>(candidates.size());
    for (int m = 2; m <= max_edges && m <= n; ++m) {
      std::vector<int> pick(m);
      for (int i = 0; i < m; ++i) pick[i] = i;
      while (true) {
        std::vector<std::uint32_t> chosen;
        for (int i : pick) chosen.push_back(candidates[i]);
        if (canonical_edges(chosen, mu) == chosen) {
          std::vector<Edge> edges;
          for (int v = 1; v <= mu; ++v) edges.push_back({"", {v, v % mu + 1}, 1});
          for (std::size_t i = 0; i < edges.size(); ++i) edges[i].label = default_edge_label(i);
          for (std::size_t i = 0; i < chosen.size(); ++i) {
            edges.push_back({"F" + std::to_string(i + 1), mask_positions(chosen[i]), 1});
          }
          Hypergraph h(mu, edges);
          std::vector<std::string> removed;
          remove_union_edges(h, &removed);
          if (removed.empty()) {
            ++out.instances;
            const int pd = pd_reg(to_ideal(h, true), field_char, oracle).first;
            if (pd != expected) {
              std::string desc = "mu=" + std::to_string(mu) + " edges=";
              for (std::size_t i = 0; i < chosen.size(); ++i) desc += ints(mask_positions(chosen[i]), "{", "}");
              out.mismatches.push_back({desc, expected, pd, "conjecture"});
              out.mismatch_json.push_back(hypergraph_to_json(h));
            }
          }
        }
        int i = m - 1;
        while (i >= 0 && pick[i] == n - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

}  // namespace hyperpd
