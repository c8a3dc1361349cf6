#include "hyperpd/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "hyperpd/errors.hpp"

namespace hyperpd {

bool Edge::contains(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

// -------------------------------------------------------------- Hypergraph

Hypergraph::Hypergraph(int mu, std::vector<Edge> edges) : mu_(mu) {
  if (mu < 1) throw PreconditionError("a hypergraph needs at least one vertex");
  std::set<std::string> labels;
  std::map<std::vector<int>, std::size_t> by_set;
  for (auto& e : edges) {
    if (e.label.empty()) throw PreconditionError("edge label must be non-empty");
    if (!labels.insert(e.label).second) throw PreconditionError("duplicate edge label '" + e.label + "'");
    if (e.multiplicity < 1) throw PreconditionError("edge '" + e.label + "' has multiplicity < 1");
    std::sort(e.vertices.begin(), e.vertices.end());
    e.vertices.erase(std::unique(e.vertices.begin(), e.vertices.end()), e.vertices.end());
    if (e.vertices.empty()) throw PreconditionError("edge '" + e.label + "' is empty");
    if (e.vertices.front() < 1 || e.vertices.back() > mu) {
      throw PreconditionError("edge '" + e.label + "' has a vertex outside 1.." + std::to_string(mu));
    }
    auto [it, inserted] = by_set.emplace(e.vertices, edges_.size());
    if (inserted) {
      edges_.push_back(std::move(e));
    } else {
      edges_[it->second].multiplicity += e.multiplicity;
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.vertices < b.vertices; });
  std::vector<bool> covered(static_cast<std::size_t>(mu) + 1, false);
  for (const auto& e : edges_) {
    for (int v : e.vertices) covered[v] = true;
  }
  for (int v = 1; v <= mu; ++v) {
    if (!covered[v]) throw PreconditionError("vertex " + std::to_string(v) + " lies on no edge");
  }
}

int Hypergraph::variable_count() const {
  return std::accumulate(edges_.begin(), edges_.end(), 0,
                         [](int acc, const Edge& e) { return acc + e.multiplicity; });
}

const Edge* Hypergraph::find(std::string_view label) const {
  for (const auto& e : edges_) {
    if (e.label == label) return &e;
  }
  return nullptr;
}

const Edge& Hypergraph::edge(std::string_view label) const {
  const Edge* e = find(label);
  if (e == nullptr) throw PreconditionError("unknown edge label '" + std::string(label) + "'");
  return *e;
}

bool Hypergraph::has_edge(const std::vector<int>& vertices) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return e.vertices == vertices; });
}

VertexKind Hypergraph::kind(int v) const {
  return has_edge({v}) ? VertexKind::Closed : VertexKind::Open;
}

int Hypergraph::degree(int v) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.contains(v); }));
}

int Hypergraph::dimension() const {
  std::size_t best = 0;
  for (const auto& e : edges_) best = std::max(best, e.size());
  return static_cast<int>(best) - 1;
}

bool Hypergraph::operator==(const Hypergraph& other) const {
  if (mu_ != other.mu_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].vertices != other.edges_[i].vertices ||
        edges_[i].multiplicity != other.edges_[i].multiplicity) {
      return false;
    }
  }
  return true;
}

// ------------------------------------------------------- ideal <-> graph

namespace {

/// Variable names of every edge, copies as label, label_2, ...
std::vector<std::vector<std::string>> edge_variables(const Hypergraph& h) {
  std::set<std::string> taken;
  for (const auto& e : h.edges()) taken.insert(e.label);
  std::vector<std::vector<std::string>> names;
  names.reserve(h.edges().size());
  for (const auto& e : h.edges()) {
    std::vector<std::string> vars{e.label};
    int suffix = 2;
    while (static_cast<int>(vars.size()) < e.multiplicity) {
      std::string candidate = e.label + "_" + std::to_string(suffix++);
      if (taken.insert(candidate).second) vars.push_back(candidate);
    }
    names.push_back(std::move(vars));
  }
  return names;
}

MonomialIdeal realize(const Hypergraph& h, const std::vector<std::vector<std::string>>& names) {
  std::vector<std::string> variables;
  for (const auto& group : names) variables.insert(variables.end(), group.begin(), group.end());
  std::vector<Monomial> gens;
  gens.reserve(h.mu());
  for (int j = 1; j <= h.mu(); ++j) {
    std::vector<std::string> support;
    for (std::size_t e = 0; e < h.edges().size(); ++e) {
      if (h.edges()[e].contains(j)) support.insert(support.end(), names[e].begin(), names[e].end());
    }
    gens.emplace_back(std::move(support));
  }
  return MonomialIdeal(std::move(variables), std::move(gens));
}

/// Drops redundant generators (order preserved), fills the vertex map and
/// dualizes. `old_count` is the number of generators that correspond to old
/// vertices (a trailing extra generator has no preimage).
Hypergraph finish(const MonomialIdeal& ideal, std::size_t old_count, VertexMap* map) {
  for (const auto& g : ideal.generators()) {
    if (g.is_unit()) throw PreconditionError("operation produces the unit ideal");
  }
  std::vector<int> kept;
  auto pruned = prune_redundant(ideal, &kept);
  if (map != nullptr) {
    map->assign(old_count, 0);
    for (std::size_t i = 0; i < old_count; ++i) (*map)[i] = kept[i] + 1;
  }
  return from_ideal(pruned);
}

}  // namespace

Hypergraph from_ideal(const MonomialIdeal& ideal) {
  if (ideal.empty()) throw PreconditionError("the zero ideal has no dual hypergraph");
  if (ideal.is_unit()) throw PreconditionError("the unit ideal has no dual hypergraph");
  if (!ideal.is_minimal()) throw PreconditionError("generators are not a minimal generating set");
  const auto& gens = ideal.generators();
  std::vector<Edge> edges;
  for (const auto& var : ideal.variables()) {
    Edge e{var, {}, 1};
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (gens[j].contains(var)) e.vertices.push_back(static_cast<int>(j) + 1);
    }
    if (!e.vertices.empty()) edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(gens.size()), std::move(edges));
}

MonomialIdeal to_ideal(const Hypergraph& h, bool force) {
  if (!force && !is_separated(h)) {
    throw PreconditionError("hypergraph is not separated; its realization is not minimal");
  }
  return realize(h, edge_variables(h));
}

bool is_separated(const Hypergraph& h) {
  const auto& edges = h.edges();
  auto distinguishes = [&](int in, int out) {
    return std::any_of(edges.begin(), edges.end(),
                       [&](const Edge& e) { return e.contains(in) && !e.contains(out); });
  };
  for (int a = 1; a <= h.mu(); ++a) {
    for (int b = a + 1; b <= h.mu(); ++b) {
      if (!distinguishes(a, b) || !distinguishes(b, a)) return false;
    }
  }
  return true;
}

Hypergraph remove_union_edges(const Hypergraph& h, std::vector<std::string>* removed) {
  // An edge built from strictly smaller edges stays a union after any other
  // union edge is deleted, so one pass reaches the fixpoint.
  std::vector<Edge> keep;
  for (const auto& e : h.edges()) {
    std::set<int> covered;
    for (const auto& f : h.edges()) {
      if (f.vertices.size() < e.vertices.size() &&
          std::includes(e.vertices.begin(), e.vertices.end(), f.vertices.begin(), f.vertices.end())) {
        covered.insert(f.vertices.begin(), f.vertices.end());
      }
    }
    if (covered.size() == e.vertices.size()) {
      if (removed != nullptr) removed->push_back(e.label);
    } else {
      keep.push_back(Edge{e.label, e.vertices, 1});
    }
  }
  return Hypergraph(h.mu(), std::move(keep));
}

Hypergraph colon_by_edge(const Hypergraph& h, std::string_view label, VertexMap* map) {
  const auto names = edge_variables(h);
  const auto& edges = h.edges();
  const Edge& target = h.edge(label);
  const auto idx = static_cast<std::size_t>(&target - edges.data());
  const Monomial x(std::vector<std::string>{names[idx].back()});
  auto ideal = realize(h, names);
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.colon(x));
  return finish(MonomialIdeal(ideal.variables(), std::move(gens)), h.mu(), map);
}

Hypergraph add_edge_variable(const Hypergraph& h, std::string_view label, VertexMap* map) {
  const auto names = edge_variables(h);
  const Edge& target = h.edge(label);
  const auto idx = static_cast<std::size_t>(&target - h.edges().data());
  const Monomial x(std::vector<std::string>{names[idx].back()});
  auto ideal = realize(h, names).with_generator(x);
  return finish(ideal, h.mu(), map);
}

Hypergraph remove_vertex(const Hypergraph& h, int v, VertexMap* map) {
  if (v < 1 || v > h.mu()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  if (h.mu() == 1) throw PreconditionError("removing the only vertex leaves the zero ideal");
  auto ideal = to_ideal(h, true);
  std::vector<Monomial> gens = ideal.generators();
  // Mark the removed generator by replacing it with a copy of a neighbour's
  // generator would break the map; drop it and shift indices instead.
  gens.erase(gens.begin() + (v - 1));
  std::vector<int> kept;
  auto pruned = prune_redundant(MonomialIdeal(ideal.variables(), std::move(gens)), &kept);
  if (map != nullptr) {
    map->assign(static_cast<std::size_t>(h.mu()), 0);
    for (int old = 1, k = 0; old <= h.mu(); ++old) {
      if (old == v) continue;
      (*map)[old - 1] = kept[k++] + 1;
    }
  }
  return from_ideal(pruned);
}

Hypergraph colon_vertex(const Hypergraph& h, int v, VertexMap* map) {
  if (v < 1 || v > h.mu()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  if (h.mu() == 1) throw PreconditionError("colon of a one-vertex hypergraph is the zero ideal");
  auto ideal = to_ideal(h, true);
  const Monomial m = ideal.generators()[v - 1];
  std::vector<Monomial> gens;
  for (int j = 1; j <= h.mu(); ++j) {
    if (j != v) gens.push_back(ideal.generators()[j - 1].colon(m));
  }
  for (const auto& g : gens) {
    if (g.is_unit()) throw PreconditionError("operation produces the unit ideal");
  }
  std::vector<int> kept;
  auto pruned = prune_redundant(MonomialIdeal(ideal.variables(), std::move(gens)), &kept);
  if (map != nullptr) {
    map->assign(static_cast<std::size_t>(h.mu()), 0);
    for (int old = 1, k = 0; old <= h.mu(); ++old) {
      if (old == v) continue;
      (*map)[old - 1] = kept[k++] + 1;
    }
  }
  return from_ideal(pruned);
}

// --------------------------------------------------------------- components

std::vector<Component> connected_components(const Hypergraph& h) {
  std::vector<int> parent(static_cast<std::size_t>(h.mu()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : h.edges()) {
    for (int v : e.vertices) {
      int a = find(e.vertices.front());
      int b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> groups;  // root -> vertices; roots are minimal vertices
  for (int v = 1; v <= h.mu(); ++v) groups[find(v)].push_back(v);

  std::vector<Component> out;
  for (auto& [root, vertices] : groups) {
    std::map<int, int> renumber;
    for (std::size_t i = 0; i < vertices.size(); ++i) renumber[vertices[i]] = static_cast<int>(i) + 1;
    std::vector<Edge> edges;
    for (const auto& e : h.edges()) {
      if (find(e.vertices.front()) != root) continue;
      Edge copy{e.label, {}, e.multiplicity};
      for (int v : e.vertices) copy.vertices.push_back(renumber.at(v));
      edges.push_back(std::move(copy));
    }
    out.push_back(Component{Hypergraph(static_cast<int>(vertices.size()), std::move(edges)), vertices});
  }
  return out;
}

// ----------------------------------------------------------------- branches

namespace {

std::vector<const Edge*> edges_through(const Hypergraph& h, int v) {
  std::vector<const Edge*> out;
  for (const auto& e : h.edges()) {
    if (e.contains(v)) out.push_back(&e);
  }
  return out;
}

/// Walks from hub through `join`; returns the branch vertices or nothing.
std::optional<std::vector<int>> walk_branch(const Hypergraph& h, int hub, const Edge& join) {
  const Edge* prev = &join;
  int cur = join.vertices[0] == hub ? join.vertices[1] : join.vertices[0];
  std::vector<int> path{cur};
  while (true) {
    bool closed = false;
    std::vector<const Edge*> onward;
    for (const Edge* e : edges_through(h, cur)) {
      if (e->size() > 2) return std::nullopt;
      if (e->size() == 1) {
        closed = true;
      } else if (e != prev) {
        onward.push_back(e);
      }
    }
    if (closed) {
      if (!onward.empty()) return std::nullopt;
      return path;
    }
    if (onward.size() != 1) return std::nullopt;
    const Edge* next_edge = onward.front();
    int next = next_edge->vertices[0] == cur ? next_edge->vertices[1] : next_edge->vertices[0];
    if (next == hub || std::find(path.begin(), path.end(), next) != path.end()) return std::nullopt;
    path.push_back(next);
    prev = next_edge;
    cur = next;
  }
}

}  // namespace

std::vector<BranchReduction> find_branches(const Hypergraph& h) {
  std::vector<BranchReduction> out;
  for (int w = 1; w <= h.mu(); ++w) {
    if (h.degree(w) < 3) continue;
    for (const Edge* e : edges_through(h, w)) {
      if (e->size() != 2) continue;
      auto path = walk_branch(h, w, *e);
      if (!path) continue;
      out.push_back(BranchReduction{h, BranchRule::NoRule, w, std::move(*path), e->label});
    }
  }
  return out;
}

BranchReduction branch_reduce(const Hypergraph& h, std::optional<int> hub) {
  auto branches = find_branches(h);
  if (hub) {
    std::erase_if(branches, [&](const BranchReduction& b) { return b.hub != *hub; });
  }
  if (branches.empty()) throw PreconditionError("no qualifying branch");
  for (auto& b : branches) {
    const auto n = b.branch.size();
    if (n % 3 == 1) {
      b.rule = BranchRule::ColonEdge;
      b.result = colon_by_edge(h, b.joining_edge);
      return b;
    }
    if (n % 3 == 2) {
      b.rule = BranchRule::RemoveHub;
      b.result = remove_vertex(h, b.hub);
      return b;
    }
  }
  return branches.front();
}

// --------------------------------------------------------------------- JSON

Hypergraph hypergraph_from_json(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid hypergraph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("mu") || !doc.contains("edges")) {
    throw ParseError("hypergraph JSON needs \"mu\" and \"edges\"");
  }
  if (!doc["mu"].is_number_integer()) throw ParseError("\"mu\" must be an integer");
  if (!doc["edges"].is_object()) throw ParseError("\"edges\" must be an object");
  const int mu = doc["mu"].get<int>();
  std::vector<Edge> edges;
  for (const auto& [label, verts] : doc["edges"].items()) {
    if (!verts.is_array()) throw ParseError("edge '" + label + "' must be an array");
    Edge e{label, {}, 1};
    for (const auto& v : verts) {
      if (!v.is_number_integer()) throw ParseError("edge '" + label + "' has a non-integer vertex");
      e.vertices.push_back(v.get<int>());
    }
    edges.push_back(std::move(e));
  }
  if (doc.contains("multiplicity")) {
    const auto& mult = doc["multiplicity"];
    if (!mult.is_object()) throw ParseError("\"multiplicity\" must be an object");
    for (const auto& [label, m] : mult.items()) {
      auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.label == label; });
      if (it == edges.end()) throw ParseError("multiplicity for unknown edge '" + label + "'");
      if (!m.is_number_integer()) throw ParseError("multiplicity of '" + label + "' must be an integer");
      it->multiplicity = m.get<int>();
    }
  }
  try {
    return Hypergraph(mu, std::move(edges));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string hypergraph_to_json(const Hypergraph& h, int indent) {
  nlohmann::ordered_json doc;
  doc["mu"] = h.mu();
  doc["edges"] = nlohmann::ordered_json::object();
  nlohmann::ordered_json mult = nlohmann::ordered_json::object();
  for (const auto& e : h.edges()) {
    doc["edges"][e.label] = e.vertices;
    if (e.multiplicity != 1) mult[e.label] = e.multiplicity;
  }
  if (!mult.empty()) doc["multiplicity"] = mult;
  return doc.dump(indent);
}

std::string default_edge_label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "e" + std::to_string(i + 1);
}

}  // namespace hyperpd
