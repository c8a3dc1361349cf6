#include "hyperpd/formulas.hpp"

#include <algorithm>
#include <numeric>

#include "hyperpd/errors.hpp"

namespace hyperpd {

int pd_open_string(int mu) {
  if (mu < 1) throw PreconditionError("open string needs mu >= 1");
  return mu - mu / 3;
}

int reg_open_string(int mu) {
  if (mu < 1) throw PreconditionError("open string needs mu >= 1");
  return (mu + 2) / 3;
}

int pd_open_cycle(int mu) {
  if (mu < 3) throw PreconditionError("open cycle needs mu >= 3");
  return mu - 1 - (mu - 2) / 3;
}

int pd_disjoint_open_strings(const std::vector<int>& lengths) {
  int total = 0;
  for (int n : lengths) {
    if (n < 0) throw PreconditionError("negative string length");
    total += n - n / 3;
  }
  return total;
}

bool string_edge_is_union(const std::vector<int>& gaps) {
  const int k = static_cast<int>(gaps.size()) - 1;
  for (int j = 1; j <= k; ++j) {
    const bool endpoint = (j == 1 && gaps[0] == 0) || (j == k && gaps[k] == 0);
    const bool neighbour = (j > 1 && gaps[j - 1] == 0) || (j < k && gaps[j] == 0);
    if (!endpoint && !neighbour) return false;
  }
  return true;
}

bool cycle_edge_is_union(const std::vector<int>& gaps) {
  const int k = static_cast<int>(gaps.size());
  for (int j = 0; j < k; ++j) {
    if (gaps[j] != 0 && gaps[(j + 1) % k] != 0) return false;
  }
  return true;
}

namespace {

void check_gaps(const std::vector<int>& gaps) {
  if (std::any_of(gaps.begin(), gaps.end(), [](int n) { return n < 0; })) {
    throw PreconditionError("gaps must be non-negative");
  }
}

PdResult string_theorem(const std::vector<int>& gaps) {
  const int k = static_cast<int>(gaps.size()) - 1;
  const int mu = k + std::accumulate(gaps.begin(), gaps.end(), 0);
  int sum_r = 0;
  bool zero = false;
  for (int n : gaps) {
    sum_r += n % 3;
    zero = zero || n % 3 == 0;
  }
  const int base = pd_open_string(mu);
  if (sum_r < 2 * k) return {base, std::nullopt, std::nullopt, "sum-r<2k"};
  if (sum_r > 2 * k) return {base, std::nullopt, std::nullopt, "sum-r>=2k+1"};
  if (zero) return {base, std::nullopt, std::nullopt, "sum-r=2k-with-zero"};
  return {base + 1, std::nullopt, std::nullopt, "jump"};
}

int sum_quotients(const std::vector<int>& gaps, std::size_t from, std::size_t to) {
  int s = 0;
  for (std::size_t i = from; i < to; ++i) s += gaps[i] / 3;
  return s;
}

}  // namespace

PdResult pd_string_with_edge(const std::vector<int>& gaps) {
  check_gaps(gaps);
  if (gaps.size() < 3) throw PreconditionError("string with edge needs k >= 2");
  if (string_edge_is_union(gaps)) throw PreconditionError("edge F is a union of other edges; reduce first");
  auto forward = string_theorem(gaps);
  auto backward = string_theorem(std::vector<int>(gaps.rbegin(), gaps.rend()));
  if (forward.pd != backward.pd) throw Error("string-with-edge formula disagrees with its reversal");
  return forward;
}

PdResult pd_string_with_edge(const ShapeConfig& cfg) {
  if (cfg.kind != ShapeKind::StringWithEdge) throw PreconditionError("shape is not a string with an edge");
  if (!cfg.first_closed || !cfg.last_closed) throw PreconditionError("string ends must be closed");
  return pd_string_with_edge(cfg.gaps);
}

PdResult pd_cycle_with_edge(const std::vector<int>& gaps) {
  check_gaps(gaps);
  const int k = static_cast<int>(gaps.size());
  if (k < 2) throw PreconditionError("cycle with edge needs k >= 2");
  const int mu = k + std::accumulate(gaps.begin(), gaps.end(), 0);
  return {pd_open_cycle(mu), std::nullopt, std::nullopt, "cycle-with-edge"};
}

PdResult pd_cycle_with_edge(const ShapeConfig& cfg) {
  if (cfg.kind != ShapeKind::CycleWithEdge) throw PreconditionError("shape is not a cycle with an edge");
  return pd_cycle_with_edge(cfg.gaps);
}

std::string lemma_name(LemmaCase c) {
  switch (c) {
    case LemmaCase::Stringedge: return "stringedge";
    case LemmaCase::TwoStringedge: return "2stringedge";
    case LemmaCase::SubStinky: return "substinky";
    case LemmaCase::StinkyString2k: return "stinkystring2k";
  }
  return "?";
}

PdResult lemma_case_pd(LemmaCase c, const std::vector<int>& gaps) {
  check_gaps(gaps);
  const int k = static_cast<int>(gaps.size()) - 1;
  auto fail = [&](const char* why) { return PreconditionError(lemma_name(c) + ": " + why); };
  auto inner_two_mod_three = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      if (gaps[i] % 3 != 2) return false;
    }
    return true;
  };

  switch (c) {
    case LemmaCase::Stringedge: {
      if (k < 1) throw fail("needs k >= 1");
      if (gaps[k] != 0) throw fail("last vertex must lie on F");
      if (!inner_two_mod_three(0, k)) throw fail("gaps n_1..n_k must be 2 mod 3");
      const int l = sum_quotients(gaps, 0, k);
      return {2 * k + 2 * l, std::nullopt, k + l, "stringedge"};
    }
    case LemmaCase::TwoStringedge:
    case LemmaCase::SubStinky: {
      if (k < 2) throw fail("needs k >= 2");
      if (gaps[0] != 0 || gaps[k] != 0) throw fail("both ends must lie on F");
      if (!inner_two_mod_three(1, k)) throw fail("gaps n_2..n_k must be 2 mod 3");
      const int l = sum_quotients(gaps, 1, k);
      if (c == LemmaCase::TwoStringedge) return {2 * (k - 1) + 2 * l, std::nullopt, k - 1 + l, "2stringedge"};
      return {2 * (k - 1) + 2 * l + 1, std::nullopt, std::nullopt, "substinky"};
    }
    case LemmaCase::StinkyString2k: {
      if (k < 2) throw fail("needs k >= 2");
      if (gaps[0] % 3 != 1 || gaps[k] % 3 != 1) throw fail("r_1 and r_{k+1} must be 1");
      if (!inner_two_mod_three(1, k)) throw fail("inner residues must be 2");
      const int mu = k + std::accumulate(gaps.begin(), gaps.end(), 0);
      return {pd_open_string(mu) + 1, std::nullopt, std::nullopt, "stinkystring2k"};
    }
  }
  throw fail("unknown case");
}

}  // namespace hyperpd
