#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperpd/classify.hpp"

namespace hyperpd {

// Closed forms for R/I where the dual hypergraph of I has the named shape.

int pd_open_string(int mu);   // mu - floor(mu/3)
int reg_open_string(int mu);  // ceil(mu/3)
int pd_open_cycle(int mu);    // mu - 1 - floor((mu-2)/3), mu >= 3
/// Sum over components; zero-length components contribute nothing.
int pd_disjoint_open_strings(const std::vector<int>& lengths);

struct PdResult {
  int pd = 0;
  std::optional<int> reg;
  std::optional<int> reg_upper_bound;
  std::string case_tag;
};

/// True when the higher edge of a closed-ended string with these gaps is a
/// union of the string's own edges.
bool string_edge_is_union(const std::vector<int>& gaps);
/// Same for an open cycle (k gaps).
bool cycle_edge_is_union(const std::vector<int>& gaps);

/**
 * String with both ends closed plus one edge F with k >= 2 vertices.
 * pd jumps to pd_open_string(mu) + 1 exactly when sum r_i = 2k and no r_i is
 * zero. Evaluated on the gap vector and on its reverse; the two must agree.
 * Throws PreconditionError for other shapes, open ends or a union edge.
 */
PdResult pd_string_with_edge(const ShapeConfig& cfg);
PdResult pd_string_with_edge(const std::vector<int>& gaps);

/// Open cycle plus one edge with k >= 2 vertices: pd_open_cycle(mu).
PdResult pd_cycle_with_edge(const ShapeConfig& cfg);
PdResult pd_cycle_with_edge(const std::vector<int>& gaps);

/**
 * Intermediate string-with-edge configurations, all described by the full
 * string gap vector n_1..n_{k+1}:
 *  - Stringedge: first end closed, last vertex open and in F (n_{k+1} = 0),
 *    n_i = 2 mod 3 for i <= k.
 *  - TwoStringedge: the hypergraph H_{v_2} of the SubStinky configuration.
 *  - SubStinky: both ends open and in F (n_1 = n_{k+1} = 0), inner gaps
 *    2 mod 3.
 *  - StinkyString2k: closed ends, r_1 = r_{k+1} = 1, inner residues 2.
 */
enum class LemmaCase { Stringedge, TwoStringedge, SubStinky, StinkyString2k };

std::string lemma_name(LemmaCase c);
/// Throws PreconditionError when the gaps violate the case's hypotheses.
PdResult lemma_case_pd(LemmaCase c, const std::vector<int>& gaps);

}  // namespace hyperpd
