#include "hyperpd/classify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hyperpd/errors.hpp"
#include "hyperpd/formulas.hpp"
#include "hyperpd/oracle.hpp"

namespace hyperpd {

std::string shape_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::OpenString: return "open-string";
    case ShapeKind::OpenCycle: return "open-cycle";
    case ShapeKind::StringWithEdge: return "string-with-edge";
    case ShapeKind::CycleWithEdge: return "cycle-with-edge";
    case ShapeKind::DisjointOpenStrings: return "disjoint-open-strings";
    case ShapeKind::Other: return "other";
  }
  return "other";
}

namespace {

void fill_residues(ShapeConfig& cfg) {
  cfg.residues.clear();
  cfg.quotients.clear();
  for (int n : cfg.gaps) {
    cfg.residues.push_back(n % 3);
    cfg.quotients.push_back(n / 3);
  }
}

void check_positions(int mu, std::vector<int>& positions) {
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw PreconditionError("repeated edge position");
  }
  if (!positions.empty() && (positions.front() < 1 || positions.back() > mu)) {
    throw PreconditionError("edge position out of range");
  }
}

}  // namespace

ShapeConfig string_config(int mu, std::vector<int> positions, bool first_closed, bool last_closed) {
  check_positions(mu, positions);
  if (positions.empty()) throw PreconditionError("edge needs at least one vertex");
  ShapeConfig cfg;
  cfg.kind = ShapeKind::StringWithEdge;
  cfg.mu = mu;
  cfg.positions = std::move(positions);
  cfg.first_closed = first_closed;
  cfg.last_closed = last_closed;
  int prev = 0;
  for (int p : cfg.positions) {
    cfg.gaps.push_back(p - prev - 1);
    prev = p;
  }
  cfg.gaps.push_back(mu - prev);
  fill_residues(cfg);
  for (int v = 1; v <= mu; ++v) cfg.order.push_back(v);
  return cfg;
}

ShapeConfig cycle_config(int mu, std::vector<int> positions) {
  check_positions(mu, positions);
  if (positions.size() < 2) throw PreconditionError("cycle edge needs at least two vertices");
  ShapeConfig cfg;
  cfg.kind = ShapeKind::CycleWithEdge;
  cfg.mu = mu;
  cfg.positions = std::move(positions);
  int prev = cfg.positions.back() - mu;
  for (int p : cfg.positions) {
    cfg.gaps.push_back(p - prev - 1);
    prev = p;
  }
  fill_residues(cfg);
  for (int v = 1; v <= mu; ++v) cfg.order.push_back(v);
  return cfg;
}

namespace {

using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency(int mu, const std::vector<const Edge*>& pairs) {
  Adjacency adj(static_cast<std::size_t>(mu) + 1);
  for (const Edge* e : pairs) {
    adj[e->vertices[0]].push_back(e->vertices[1]);
    adj[e->vertices[1]].push_back(e->vertices[0]);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<int> walk(const Adjacency& adj, int start, int next) {
  std::vector<int> order{start};
  int prev = start;
  int cur = next;
  while (cur != 0 && cur != start) {
    order.push_back(cur);
    int step = 0;
    for (int n : adj[cur]) {
      if (n != prev) step = n;
    }
    prev = cur;
    cur = step;
  }
  return order;
}

/// Vertex order of a Hamiltonian path, starting at the smaller endpoint.
std::optional<std::vector<int>> path_order(int mu, const std::vector<const Edge*>& pairs) {
  if (static_cast<int>(pairs.size()) != mu - 1) return std::nullopt;
  if (mu == 1) return std::vector<int>{1};
  auto adj = adjacency(mu, pairs);
  int start = 0;
  for (int v = 1; v <= mu; ++v) {
    if (adj[v].size() > 2 || adj[v].empty()) return std::nullopt;
    if (adj[v].size() == 1 && start == 0) start = v;
  }
  if (start == 0) return std::nullopt;
  auto order = walk(adj, start, adj[start][0]);
  if (static_cast<int>(order.size()) != mu) return std::nullopt;
  return order;
}

/// Vertex order of a Hamiltonian cycle from vertex 1 towards its smaller neighbour.
std::optional<std::vector<int>> cycle_order(int mu, const std::vector<const Edge*>& pairs) {
  if (mu < 3 || static_cast<int>(pairs.size()) != mu) return std::nullopt;
  auto adj = adjacency(mu, pairs);
  for (int v = 1; v <= mu; ++v) {
    if (adj[v].size() != 2) return std::nullopt;
  }
  auto order = walk(adj, 1, adj[1][0]);
  if (static_cast<int>(order.size()) != mu) return std::nullopt;
  return order;
}

std::vector<int> positions_of(const std::vector<int>& order, const Edge& f) {
  std::vector<int> pos;
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (f.contains(order[p])) pos.push_back(static_cast<int>(p) + 1);
  }
  return pos;
}

std::optional<ShapeConfig> as_string_with_edge(const Hypergraph& h, const std::vector<const Edge*>& path,
                                               const Edge& f, const std::set<int>& singles) {
  auto order = path_order(h.mu(), path);
  if (!order) return std::nullopt;
  const int first = order->front();
  const int last = order->back();
  for (int s : singles) {
    if (s != first && s != last) return std::nullopt;
  }
  const bool first_closed = singles.count(first) > 0;
  const bool last_closed = singles.count(last) > 0;
  if ((!first_closed && !f.contains(first)) || (!last_closed && !f.contains(last))) return std::nullopt;
  auto cfg = string_config(h.mu(), positions_of(*order, f), first_closed, last_closed);
  cfg.order = *order;
  cfg.edge_label = f.label;
  return cfg;
}

ShapeConfig classify_connected(const Hypergraph& h) {
  const int mu = h.mu();
  std::set<int> singles;
  std::vector<const Edge*> pairs;
  std::vector<const Edge*> highers;
  for (const auto& e : h.edges()) {
    if (e.size() == 1) singles.insert(e.vertices[0]);
    else if (e.size() == 2) pairs.push_back(&e);
    else highers.push_back(&e);
  }

  ShapeConfig cfg;
  cfg.mu = mu;
  if (mu == 1) {
    cfg.kind = ShapeKind::OpenString;
    cfg.order = {1};
    cfg.first_closed = cfg.last_closed = true;
    return cfg;
  }

  if (highers.size() > 1) return cfg;

  if (highers.size() == 1) {
    const Edge& f = *highers.front();
    if (singles.empty()) {
      if (auto order = cycle_order(mu, pairs)) {
        cfg = cycle_config(mu, positions_of(*order, f));
        cfg.order = *order;
        cfg.edge_label = f.label;
        return cfg;
      }
    }
    if (auto s = as_string_with_edge(h, pairs, f, singles)) return *s;
    return cfg;
  }

  // Only 0- and 1-dimensional edges.
  if (singles.empty()) {
    if (auto order = cycle_order(mu, pairs)) {
      cfg.kind = ShapeKind::OpenCycle;
      cfg.order = *order;
      return cfg;
    }
    if (static_cast<int>(pairs.size()) == mu + 1) {
      for (std::size_t c = 0; c < pairs.size(); ++c) {
        auto rest = pairs;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(c));
        if (auto order = cycle_order(mu, rest)) {
          cfg = cycle_config(mu, positions_of(*order, *pairs[c]));
          cfg.order = *order;
          cfg.edge_label = pairs[c]->label;
          return cfg;
        }
      }
    }
  }
  if (auto order = path_order(mu, pairs)) {
    if (singles == std::set<int>{order->front(), order->back()}) {
      cfg.kind = ShapeKind::OpenString;
      cfg.order = *order;
      cfg.first_closed = cfg.last_closed = true;
      return cfg;
    }
  }
  if (static_cast<int>(pairs.size()) == mu) {
    // A path plus a 2-vertex edge F; prefer a reading with both ends closed.
    std::optional<ShapeConfig> best;
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      auto rest = pairs;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(c));
      auto s = as_string_with_edge(h, rest, *pairs[c], singles);
      if (!s) continue;
      if (s->first_closed && s->last_closed) return *s;
      if (!best) best = s;
    }
    if (best) return *best;
  }
  return cfg;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

ShapeConfig classify_shape(const Hypergraph& h) {
  auto components = connected_components(h);
  if (components.size() == 1) return classify_connected(h);
  ShapeConfig cfg;
  cfg.mu = h.mu();
  for (const auto& c : components) {
    auto sub = classify_connected(c.graph);
    if (sub.kind != ShapeKind::OpenString) {
      cfg.component_lengths.clear();
      return cfg;
    }
    cfg.component_lengths.push_back(sub.mu);
    for (int v : sub.order) cfg.order.push_back(c.vertices[v - 1]);
  }
  cfg.kind = ShapeKind::DisjointOpenStrings;
  return cfg;
}

std::string shape_to_json(const ShapeConfig& cfg, int indent) {
  nlohmann::ordered_json doc;
  doc["shape"] = shape_name(cfg.kind);
  doc["mu"] = cfg.mu;
  if (cfg.kind == ShapeKind::Other) return doc.dump(indent);
  doc["order"] = cfg.order;
  if (cfg.kind == ShapeKind::StringWithEdge || cfg.kind == ShapeKind::CycleWithEdge) {
    doc["edge"] = cfg.edge_label;
    doc["k"] = cfg.k();
    doc["positions"] = cfg.positions;
    doc["gaps"] = cfg.gaps;
    doc["residues"] = cfg.residues;
    doc["quotients"] = cfg.quotients;
  }
  if (cfg.kind == ShapeKind::StringWithEdge) {
    doc["first_closed"] = cfg.first_closed;
    doc["last_closed"] = cfg.last_closed;
  }
  if (cfg.kind == ShapeKind::DisjointOpenStrings) doc["component_lengths"] = cfg.component_lengths;
  return doc.dump(indent);
}

namespace {

struct ComponentValue {
  int pd;
  std::optional<int> reg;
  std::string method;
};

ComponentValue evaluate(const Hypergraph& g, const ShapeConfig& cfg, const PdAutoOptions& options) {
  switch (cfg.kind) {
    case ShapeKind::OpenString:
      // A lone vertex of the reduced graph carries a single variable, so
      // R/(x) has reg 0; the ceiling formula assumes a degree-two generator.
      return {pd_open_string(cfg.mu), cfg.mu == 1 ? 0 : reg_open_string(cfg.mu), "formula:open-string"};
    case ShapeKind::OpenCycle:
      return {pd_open_cycle(cfg.mu), std::nullopt, "formula:open-cycle"};
    case ShapeKind::StringWithEdge:
      if (cfg.first_closed && cfg.last_closed && cfg.k() >= 2 && !string_edge_is_union(cfg.gaps)) {
        return {pd_string_with_edge(cfg).pd, std::nullopt, "formula:string-with-edge"};
      }
      break;
    case ShapeKind::CycleWithEdge:
      return {pd_cycle_with_edge(cfg).pd, std::nullopt, "formula:cycle-with-edge"};
    default:
      break;
  }
  if (g.variable_count() > options.budget) {
    throw BudgetExceeded("component needs the oracle on " + std::to_string(g.variable_count()) +
                         " variables; budget is " + std::to_string(options.budget));
  }
  OracleOptions oracle;
  oracle.max_variables = options.budget;
  auto [pd, reg] = pd_reg(to_ideal(g, true), options.field_char, oracle);
  return {pd, reg, "oracle"};
}

}  // namespace

PdAutoResult pd_auto(const Hypergraph& h, const PdAutoOptions& options) {
  PdAutoResult out;
  std::vector<std::string> removed;
  auto reduced = remove_union_edges(h, &removed);
  {
    std::string line = "union edges removed:";
    if (removed.empty()) line += " none";
    for (std::size_t i = 0; i < removed.size(); ++i) line += (i ? ", " : " ") + removed[i];
    out.trace.push_back(line);
  }

  auto components = connected_components(reduced);
  out.trace.push_back("components: " + std::to_string(components.size()));
  std::vector<std::string> methods;
  bool reg_known = true;
  int reg = 0;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& comp = components[c];
    auto cfg = classify_shape(comp.graph);
    auto value = evaluate(comp.graph, cfg, options);
    std::ostringstream line;
    line << "component " << c + 1 << " [vertices " << join_ints(comp.vertices) << "]: " << shape_name(cfg.kind)
         << " mu=" << cfg.mu;
    if (cfg.kind == ShapeKind::StringWithEdge || cfg.kind == ShapeKind::CycleWithEdge) {
      line << " k=" << cfg.k() << " gaps=(" << join_ints(cfg.gaps) << ")";
    }
    line << " -> pd " << value.pd;
    if (value.reg) line << ", reg " << *value.reg;
    line << " via " << value.method;
    out.trace.push_back(line.str());

    out.pd += value.pd;
    if (value.reg) reg += *value.reg;
    else reg_known = false;
    if (std::find(methods.begin(), methods.end(), value.method) == methods.end()) methods.push_back(value.method);
  }
  // Deleting union edges or collapsing multiplicities keeps pd but changes
  // degrees, so reg is only reported for an untouched hypergraph.
  const bool untouched = removed.empty() && std::all_of(h.edges().begin(), h.edges().end(),
                                                        [](const Edge& e) { return e.multiplicity == 1; });
  if (reg_known && untouched) out.reg = reg;
  for (std::size_t i = 0; i < methods.size(); ++i) out.method += (i ? "+" : "") + methods[i];
  return out;
}

}  // namespace hyperpd
