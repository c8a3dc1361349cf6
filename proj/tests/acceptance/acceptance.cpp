// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "hyperpd/classify.hpp"
#include "hyperpd/families.hpp"
#include "hyperpd/formulas.hpp"
#include "hyperpd/hypergraph.hpp"
#include "hyperpd/oracle.hpp"
#include "hyperpd/verify.hpp"

using namespace hyperpd;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail << "first failure: " << what << "; ";
    ok = false;
  }
};

int failures = 0;

void criterion(const std::string& id, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "exception: " << e.what() << "; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!c.ok) ++failures;
  std::cout << id << " " << (c.ok ? "PASS" : "FAIL") << " " << c.detail.str() << "(" << secs << "s)" << std::endl;
}

void run_family(Check& c, Family f, VerifyBounds b, int min_instances) {
  const auto out = verify_family(f, b);
  c.detail << family_name(f) << " instances=" << out.instances << " mismatches=" << out.mismatches.size();
  for (const auto& [k, v] : out.stats) c.detail << " " << k << "=" << v;
  c.detail << "; ";
  c.expect(out.instances >= min_instances, "too few instances");
  for (const auto& m : out.mismatches) {
    c.expect(false, m.instance + " formula=" + std::to_string(m.formula) + " oracle=" + std::to_string(m.oracle));
  }
}

std::pair<int, int> oracle(const MonomialIdeal& I) { return pd_reg(I); }
std::pair<int, int> oracle(const Hypergraph& h) { return pd_reg(to_ideal(h, true)); }

Hypergraph redundant_edges_example() {
  std::vector<Edge> e;
  for (int v = 1; v < 11; ++v) e.push_back({default_edge_label(v), {v, v + 1}, 1});
  e.push_back({"a", {1}, 1});
  e.push_back({"z", {11}, 1});
  e.push_back({"F", {3, 4, 5, 9}, 1});
  e.push_back({"R1", {1, 11}, 1});
  e.push_back({"R2", {5, 6, 7, 8}, 1});
  e.push_back({"R3", {2, 3, 9, 10}, 1});
  return Hypergraph(11, e);
}

long long alternating_sum(const BettiTable& t) {
  long long s = 0;
  const auto totals = t.totals();
  for (std::size_t i = 0; i < totals.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * totals[i];
  return s;
}

Monomial fresh_monomial(const MonomialIdeal& I, int degree) {
  std::vector<std::string> vars;
  for (int i = 0; i < degree; ++i) vars.push_back("z" + std::to_string(i + 1));
  for (const auto& v : vars) {
    if (std::find(I.variables().begin(), I.variables().end(), v) != I.variables().end()) {
      throw std::logic_error("fresh variable clashes");
    }
  }
  return Monomial(vars);
}

Monomial random_monomial(std::mt19937_64& rng, const MonomialIdeal& I) {
  const auto& vars = I.variables();
  std::vector<std::string> pick;
  std::uniform_int_distribution<int> deg(1, std::min<int>(3, static_cast<int>(vars.size())));
  auto shuffled = vars;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  pick.assign(shuffled.begin(), shuffled.begin() + deg(rng));
  return Monomial(pick);
}

// n_i = 3 l_i + r_i over all r in {0,1,2}^{k+1}, l in [0,3]^{k+1}.
void floor_lemmas(Check& c) {
  auto f = [](long long n) { return n - n / 3; };
  long long cases_lt = 0, cases_ge = 0, cases_r1 = 0;
  for (int k = 2; k <= 6; ++k) {
    const int m = k + 1;
    std::vector<int> r(m, 0), l(m, 0), n(m, 0);
    long long total_r = 1;
    for (int i = 0; i < m; ++i) total_r *= 3;
    long long total_l = 1;
    for (int i = 0; i < m; ++i) total_l *= 4;
    for (long long ri = 0; ri < total_r; ++ri) {
      long long x = ri;
      int sum_r = 0;
      for (int i = 0; i < m; ++i) {
        r[i] = static_cast<int>(x % 3);
        x /= 3;
        sum_r += r[i];
      }
      if (sum_r == 2 * k) continue;
      for (long long li = 0; li < total_l; ++li) {
        long long y = li;
        long long sum_n = 0, sum_f = 0;
        for (int i = 0; i < m; ++i) {
          l[i] = static_cast<int>(y % 4);
          y /= 4;
          n[i] = 3 * l[i] + r[i];
          sum_n += n[i];
          sum_f += f(n[i]);
        }
        const long long whole = f(k + sum_n);
        if (sum_r < 2 * k) {
          ++cases_lt;
          if (!(sum_f < whole)) c.expect(false, "lem:<2k at k=" + std::to_string(k));
          continue;
        }
        ++cases_ge;
        if (whole != sum_f) c.expect(false, "lem:>2k+1 (1) at k=" + std::to_string(k));
        if (r[0] != 2) continue;
        ++cases_r1;
        const long long rest = sum_n - n[0];
        const long long lhs = n[0] - (n[0] - 2) / 3 + (k - 2) + rest - (k + rest) / 3;
        if (!(lhs < sum_f)) c.expect(false, "lem:>2k+1 (2) at k=" + std::to_string(k));
      }
    }
  }
  c.detail << "sum-r<2k cases=" << cases_lt << " sum-r>=2k+1 cases=" << cases_ge << " with r1=2: " << cases_r1
           << "; ";
}

}  // namespace

int main() {
  criterion("A1", [](Check& c) {
    VerifyBounds b;
    b.max_mu = 12;
    run_family(c, Family::Strings, b, 12);
  });

  criterion("A2", [](Check& c) {
    VerifyBounds b;
    b.max_mu = 12;
    run_family(c, Family::Cycles, b, 10);
  });

  criterion("A3", [](Check& c) {
    VerifyBounds b;
    b.max_mu = 8;
    b.samples = 200;
    b.sample_mus = {9, 10};
    run_family(c, Family::StringEdge, b, 200);
  });

  criterion("A4", [](Check& c) {
    VerifyBounds b;
    b.max_mu = 8;
    b.samples = 100;
    b.sample_mus = {9, 10};
    run_family(c, Family::CycleEdge, b, 100);
  });

  criterion("A5", [](Check& c) {
    const int h1 = pd_auto(string_with_edge(9, {3, 5, 8})).pd;
    const int h2 = pd_auto(string_with_edge(9, {3, 5, 7})).pd;
    const int h3 = pd_auto(string_with_edge(9, {3, 6, 9})).pd;
    c.detail << "string9 triple=(" << h1 << "," << h2 << "," << h3 << ") ";
    c.expect(h1 == 7 && h2 == 7 && h3 == 6, "string9 triple");
    const auto re = pd_auto(redundant_edges_example());
    c.detail << "redundant-edges=" << re.pd << " ";
    c.expect(re.pd == 8, "redundant-edges pd");
    c.expect(oracle(redundant_edges_example()).first == 8, "redundant-edges oracle pd");
    std::vector<std::string> removed;
    remove_union_edges(from_ideal(parse_ideal("abk, bcl, cdklm, dekn, efgn, ghmn, hikl, ijk")), &removed);
    std::sort(removed.begin(), removed.end());
    c.detail << "eight-generator removed=" << removed.size() << "; ";
    c.expect(removed == std::vector<std::string>{"k", "n"}, "eight-generator removed edges");
  });

  criterion("A6", [](Check& c) {
    VerifyBounds b;
    b.max_mu = 10;
    run_family(c, Family::Lemmas, b, 10);
  });

  criterion("A7", [](Check& c) {
    auto I = to_ideal(string_with_edge(10, {1, 4, 7, 10}, false, false));
    std::vector<int> v2;
    for (int j = 1; j <= 10; ++j) {
      if (j != 4) v2.push_back(j);
    }
    const auto rep = check_betti_splitting(I, {4}, v2);
    const int pd = oracle(I).first;
    c.detail << "q=" << rep.q << " r=" << rep.r << " predicted=" << rep.predicted_pd.value_or(-1) << " oracle=" << pd
             << "; ";
    c.expect(rep.q == 6 && rep.r == 4 && rep.hypotheses_hold && rep.predicted_pd == 7 && pd == 7, "fixed split");
    VerifyBounds b;
    b.max_mu = 12;
    b.samples = 60;
    run_family(c, Family::Splitting, b, 60);
  });

  criterion("A8", [](Check& c) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> mult(1, 3);
    int done = 0;
    while (done < 25) {
      auto h = from_ideal(random_squarefree_ideal(rng, 5, 5));
      auto edges = h.edges();
      for (auto& e : edges) e.multiplicity = mult(rng);
      Hypergraph heavy(h.mu(), edges);
      if (heavy.variable_count() > 14) continue;
      c.expect(betti_table(to_ideal(h)).totals() == betti_table(to_ideal(heavy)).totals(),
               to_ideal(h).to_string());
      ++done;
    }
    c.detail << "comparisons=" << done << "; ";
  });

  criterion("A9", [](Check& c) {
    std::mt19937_64 rng(99);
    int monotone = 0, bound = 0;
    for (int t = 0; t < 200; ++t) {
      const auto I = random_squarefree_ideal(rng, 7, 6);
      const auto h = from_ideal(I);
      const auto [pd, reg] = oracle(I);
      const std::string tag = I.to_string();

      c.expect(oracle(remove_union_edges(h)).first == pd, "union removal " + tag);

      for (std::size_t drop = 0; drop < h.edges().size(); ++drop) {
        auto edges = h.edges();
        edges.erase(edges.begin() + static_cast<long>(drop));
        bool covered = true;
        for (int v = 1; v <= h.mu() && covered; ++v) {
          covered = std::any_of(edges.begin(), edges.end(), [v](const Edge& e) { return e.contains(v); });
        }
        if (!covered) continue;
        Hypergraph sub(h.mu(), edges);
        if (!is_separated(sub)) continue;
        ++monotone;
        c.expect(oracle(sub).first <= pd, "monotonicity " + tag);
      }

      const int d = 1 + t % 2;
      const auto [spd, sreg] = oracle(scale_by_monomial(I, fresh_monomial(I, d)));
      c.expect(spd == pd && sreg == reg + d, "scaling " + tag);

      const auto m = random_monomial(rng, I);
      const auto colon = colon_by_monomial(I, m);
      if (colon.is_unit()) continue;
      ++bound;
      const int reg_sum = oracle(minimalize(I.with_generator(m))).second;
      const int reg_colon = oracle(colon).second;
      c.expect(reg_sum <= std::max(reg, reg_colon + static_cast<int>(m.degree()) - 1), "(I,m) bound " + tag);
    }
    c.detail << "ideals=200 monotone-pairs=" << monotone << " reg-bound-cases=" << bound << "; ";
  });

  criterion("A10", [](Check& c) {
    std::mt19937_64 rng(10);
    int tables = 0;
    for (int t = 0; t < 100; ++t) {
      const auto I = random_squarefree_ideal(rng, 6, 6);
      for (int p : {0, 2}) {
        const auto a = betti_table(I, p);
        c.expect(a == lcm_lattice_betti(I, p), "cross-oracle " + I.to_string());
        c.expect(alternating_sum(a) == 0, "alternating sum " + I.to_string());
        c.expect(k_polynomial(a) == inclusion_exclusion_k_polynomial(I, a.variables()), "K-polynomial " + I.to_string());
        ++tables;
      }
    }
    c.detail << "tables=" << tables << "; ";
  });

  criterion("A11", floor_lemmas);

  return failures == 0 ? 0 : 1;
}
