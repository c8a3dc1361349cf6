#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperpd/ideal.hpp"

namespace hyperpd {

using Mask = std::uint32_t;

struct OracleOptions {
  int max_variables = 16;
  /// Scan only multidegrees in the lcm lattice. Off means all 2^n subsets.
  bool prune = true;
};

/**
 * Multigraded Betti numbers of R/I. Multidegrees are bit masks over
 * `variables()`; only nonzero entries are stored. beta_{0,empty} = 1 is
 * included.
 */
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(std::vector<std::string> variables, int field_char);

  const std::vector<std::string>& variables() const { return variables_; }
  int field_char() const { return field_char_; }
  const std::map<std::pair<int, Mask>, long long>& entries() const { return entries_; }

  void add(int i, Mask sigma, long long rank);
  long long at(int i, Mask sigma) const;

  int pd() const;
  int reg() const;
  long long total(int i) const;
  /// beta_{i,j}: sum over multidegrees of size j.
  long long graded(int i, int j) const;
  /// Total Betti numbers beta_0..beta_pd.
  std::vector<long long> totals() const;

  std::string sigma_string(Mask sigma) const;
  /// Lines "i<TAB>sigma<TAB>rank" sorted by i, then |sigma|, then sigma; "-" is the empty set.
  std::string to_tsv() const;
  std::string to_json(int indent = -1) const;

  bool operator==(const BettiTable& other) const = default;

 private:
  std::vector<std::string> variables_;
  int field_char_ = 0;
  std::map<std::pair<int, Mask>, long long> entries_;
};

/// Hochster's formula over the Stanley-Reisner complex of I. field_char is 0
/// or a prime. Throws BudgetExceeded above max_variables.
BettiTable betti_table(const MonomialIdeal& ideal, int field_char = 0, const OracleOptions& options = {});

/// (pd, reg) of R/I.
std::pair<int, int> pd_reg(const MonomialIdeal& ideal, int field_char = 0, const OracleOptions& options = {});

/// Cross-oracle: homology of open intervals of the lcm lattice. The chain
/// enumeration grows quickly, so the default budget is smaller.
BettiTable lcm_lattice_betti(const MonomialIdeal& ideal, int field_char = 0,
                             const OracleOptions& options = {10, true});

struct SplitReport {
  int q = 0;
  int r = 0;
  int pdJ = 0, pdK = 0, pdJK = 0;
  int regJ = 0, regK = 0, regJK = 0;
  long long beta_q_qr_JK = 0;
  bool hypotheses_hold = false;
  std::optional<int> predicted_pd;
};

/// I = J + K with J, K generated by the generators at 1-based indices V1, V2.
SplitReport check_betti_splitting(const MonomialIdeal& ideal, const std::vector<int>& v1,
                                  const std::vector<int>& v2, int field_char = 0,
                                  const OracleOptions& options = {});

/// Multigraded K-polynomial sum (-1)^i beta_{i,sigma} t^sigma.
std::map<Mask, long long> k_polynomial(const BettiTable& table);
/// The same polynomial from inclusion-exclusion over generator subsets,
/// expressed over `variables` (usually the table's).
std::map<Mask, long long> inclusion_exclusion_k_polynomial(const MonomialIdeal& ideal,
                                                            const std::vector<std::string>& variables);

}  // namespace hyperpd
