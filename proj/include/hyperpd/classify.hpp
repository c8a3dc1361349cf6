#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperpd/hypergraph.hpp"

namespace hyperpd {

enum class ShapeKind { OpenString, OpenCycle, StringWithEdge, CycleWithEdge, DisjointOpenStrings, Other };

std::string shape_name(ShapeKind kind);

/**
 * Result of classify_shape.
 *
 * `order` lists the vertices along the 1-skeleton (order[p-1] sits at
 * position p). For the *WithEdge shapes `positions` are the 1-based
 * positions i_1 < ... < i_k of the higher edge along that order. String gaps
 * are n_1..n_{k+1}; cycle gaps are n_1..n_k with n_1 measured across the
 * wraparound from i_k.
 */
struct ShapeConfig {
  ShapeKind kind = ShapeKind::Other;
  int mu = 0;
  std::vector<int> order;
  std::string edge_label;
  std::vector<int> positions;
  std::vector<int> gaps;
  std::vector<int> residues;
  std::vector<int> quotients;
  bool first_closed = false;
  bool last_closed = false;
  std::vector<int> component_lengths;  // DisjointOpenStrings

  int k() const { return static_cast<int>(positions.size()); }
};

/// Gap data of a string of mu vertices with F at `positions`.
ShapeConfig string_config(int mu, std::vector<int> positions, bool first_closed, bool last_closed);
/// Gap data of a cycle of mu vertices with F at `positions`.
ShapeConfig cycle_config(int mu, std::vector<int> positions);

/// Recognizes open strings, open cycles, a string or cycle with one extra
/// edge, and disjoint unions of open strings. Anything else is Other.
ShapeConfig classify_shape(const Hypergraph& h);

std::string shape_to_json(const ShapeConfig& cfg, int indent = -1);

struct PdAutoOptions {
  int budget = 16;  // max variables handed to the oracle per component
  int field_char = 0;
};

struct PdAutoResult {
  int pd = 0;
  std::optional<int> reg;  // only when no edge was removed or merged
  std::string method;
  std::vector<std::string> trace;
};

/**
 * Union-edge removal, then per component: closed form when the shape is
 * covered by a theorem, otherwise the oracle. Component values are summed.
 * Throws BudgetExceeded when a component needs the oracle and has more
 * variables than `budget`.
 */
PdAutoResult pd_auto(const Hypergraph& h, const PdAutoOptions& options = {});

}  // namespace hyperpd
