#pragma once

#include <random>
#include <vector>

#include "hyperpd/formulas.hpp"
#include "hyperpd/hypergraph.hpp"
#include "hyperpd/ideal.hpp"

namespace hyperpd {

// Builders for the hypergraph families. String and cycle edges get labels
// a, b, c, ... in canonical edge order; the extra edge is labeled "F".

Hypergraph open_string(int mu);
Hypergraph open_cycle(int mu);

/// String 1..mu (interior open) plus F at the given vertices. Ends are
/// closed when requested; an open end must lie on F to keep it covered.
Hypergraph string_with_edge(int mu, const std::vector<int>& positions, bool first_closed = true,
                            bool last_closed = true);
Hypergraph string_with_edge_from_gaps(const std::vector<int>& gaps, bool first_closed = true,
                                      bool last_closed = true);

Hypergraph cycle_with_edge(int mu, const std::vector<int>& positions);
Hypergraph cycle_with_edge_from_gaps(const std::vector<int>& gaps);

/// Hypergraph described by a lemma case and its string gap vector.
Hypergraph lemma_hypergraph(LemmaCase c, const std::vector<int>& gaps);

/// All gap vectors (n_1..n_{k+1}) accepted by the lemma case with mu <= max_mu.
std::vector<std::vector<int>> lemma_instances(LemmaCase c, int max_mu);

/// Random square-free ideal on at most `max_variables` variables x1, x2, ...
/// with between 1 and `max_generators` generators, minimalized.
MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int max_variables, int max_generators);

}  // namespace hyperpd
