#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpd/formulas.hpp"

namespace hyperpd {

enum class Family { Strings, Cycles, StringEdge, CycleEdge, Lemmas, Splitting, Reductions };

std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
std::optional<LemmaCase> parse_lemma(std::string_view name);

struct VerifyBounds {
  int max_mu = 8;
  /// Extra random instances: string-edge/cycle-edge draw them at sample_mus,
  /// splitting/reductions draw random ideals.
  int samples = 0;
  std::uint64_t seed = 1;
  std::vector<int> sample_mus;
  std::optional<LemmaCase> lemma;  // Lemmas family: one case, or all when unset
  int field_char = 0;
  int budget = 16;
};

struct Mismatch {
  std::string instance;
  int formula = 0;
  int oracle = 0;
  std::string note;
};

struct VerifyOutcome {
  std::string family;
  int instances = 0;
  std::vector<Mismatch> mismatches;
  double elapsed_seconds = 0;
  /// Family-specific counters (e.g. jump cases, splittings whose hypotheses held).
  std::map<std::string, long long> stats;
};

/// Enumerates the family, compares closed forms with the oracle.
VerifyOutcome verify_family(Family family, const VerifyBounds& bounds);

struct ConjectureOutcome {
  int instances = 0;
  /// Instances where pd differs from the open cycle's pd.
  std::vector<Mismatch> mismatches;
  std::vector<std::string> mismatch_json;
  double elapsed_seconds = 0;
};

/// Open cycles of length 3..max_mu carrying 2..max_edges extra edges (each
/// with at least min_edge_size vertices, none a union of other edges), up to rotation
/// and reflection. Collects evidence only.
ConjectureOutcome conjecture_search(int max_mu, int max_edges, int field_char = 0, int budget = 16,
                                    int min_edge_size = 2);

}  // namespace hyperpd
