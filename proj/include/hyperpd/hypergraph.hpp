#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpd/ideal.hpp"

namespace hyperpd {

/// One edge of a dual hypergraph. `multiplicity` counts variables that share
/// this vertex set.
struct Edge {
  std::string label;
  std::vector<int> vertices;  // sorted, 1-based
  int multiplicity = 1;

  std::size_t size() const { return vertices.size(); }
  bool contains(int v) const;
  bool operator==(const Edge& other) const = default;
};

enum class VertexKind { Open, Closed };

/**
 * Dual hypergraph of a square-free monomial ideal: vertices 1..mu are the
 * minimal generators and every variable contributes the edge of generators
 * it divides.
 *
 * Edges with identical vertex sets are merged (multiplicities add, the first
 * label is kept) and stored in lexicographic order of their vertex sets.
 * Every vertex must lie on some edge. Equality is structural: labels are
 * ignored, vertex sets and multiplicities are compared.
 */
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int mu, std::vector<Edge> edges);

  int mu() const { return mu_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Number of variables of the ideal realization (edges counted with multiplicity).
  int variable_count() const;

  const Edge* find(std::string_view label) const;
  const Edge& edge(std::string_view label) const;  // throws PreconditionError
  bool has_edge(const std::vector<int>& vertices) const;

  VertexKind kind(int v) const;
  bool is_closed(int v) const { return kind(v) == VertexKind::Closed; }
  /// Number of distinct edges containing v.
  int degree(int v) const;
  /// Largest edge size minus one.
  int dimension() const;

  bool operator==(const Hypergraph& other) const;

 private:
  int mu_ = 0;
  std::vector<Edge> edges_;
};

/// Hypergraph of a minimal generating set, vertex j <-> generator j (given order).
Hypergraph from_ideal(const MonomialIdeal& ideal);

/// One variable per edge (label, label_2, ... for multiplicities); generator
/// j is the product of the variables of edges through j. Throws
/// PreconditionError on a non-separated hypergraph unless `force` is set.
MonomialIdeal to_ideal(const Hypergraph& h, bool force = false);

bool is_separated(const Hypergraph& h);

/// Deletes every edge that is a union of other edges and collapses
/// multiplicities to one. Labels of removed edges are appended to `removed`.
Hypergraph remove_union_edges(const Hypergraph& h, std::vector<std::string>* removed = nullptr);

/// Vertex correspondence for the colon-type operations: entry v-1 is the new
/// index of old vertex v, or 0 when that generator became redundant.
using VertexMap = std::vector<int>;

/// H : F, the hypergraph of I : x_F.
Hypergraph colon_by_edge(const Hypergraph& h, std::string_view label, VertexMap* map = nullptr);
/// (H, x_F), the hypergraph of (I, x_F); the new isolated vertex comes last.
Hypergraph add_edge_variable(const Hypergraph& h, std::string_view label, VertexMap* map = nullptr);
/// H_v, the hypergraph of I with generator m_v dropped.
Hypergraph remove_vertex(const Hypergraph& h, int v, VertexMap* map = nullptr);
/// Q_v = H_v : v, the hypergraph of I_v : m_v.
Hypergraph colon_vertex(const Hypergraph& h, int v, VertexMap* map = nullptr);

struct Component {
  Hypergraph graph;
  std::vector<int> vertices;  // original label of new vertex i+1
};

/// Edge-connectivity components, each renumbered densely in increasing
/// original order. Components are ordered by their smallest vertex.
std::vector<Component> connected_components(const Hypergraph& h);

/// Which rule of the branch reduction fired.
enum class BranchRule { ColonEdge, RemoveHub, NoRule };

struct BranchReduction {
  Hypergraph result;       // unchanged input for NoRule
  BranchRule rule;
  int hub = 0;             // w
  std::vector<int> branch; // v_1..v_n, v_n the closed leaf
  std::string joining_edge;  // E = {w, v_1}
};

/**
 * Branch reduction at a vertex w of degree at least three whose branch
 * v_1..v_n has open v_1..v_{n-1}, a closed leaf v_n and only 1-dimensional
 * edges. n = 1 mod 3 gives H:E, n = 2 mod 3 gives H_w, n = 0 mod 3 returns
 * H with BranchRule::NoRule. With `hub` unset the first branch (by hub, then
 * by joining edge) with n != 0 mod 3 is used. Throws PreconditionError when no
 * branch qualifies.
 */
BranchReduction branch_reduce(const Hypergraph& h, std::optional<int> hub = std::nullopt);

/// All qualifying branches (hub, vertices, joining edge label) in canonical order.
std::vector<BranchReduction> find_branches(const Hypergraph& h);

// JSON: {"mu": int, "edges": {"<label>": [int,...]}, "multiplicity": {"<label>": int}}
Hypergraph hypergraph_from_json(std::string_view text);
std::string hypergraph_to_json(const Hypergraph& h, int indent = -1);

/// Default edge label for index i: a..z, then e27, e28, ...
std::string default_edge_label(std::size_t i);

}  // namespace hyperpd
