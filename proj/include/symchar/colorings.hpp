#pragma once

#include "symchar/exact.hpp"
#include "symchar/permutation.hpp"
#include "symchar/young_diagram.hpp"

#include <string>
#include <utility>
#include <vector>

namespace symchar {

/// Bipartite intersection graph of a factorization: left vertices are the
/// cycles of sigma1 (colored by columns), right vertices the cycles of
/// sigma2 (colored by rows), with an edge whenever two cycles share a point.
struct BipartiteGraph {
  int left_count = 0;
  int right_count = 0;
  std::vector<std::pair<int, int>> edges; // sorted, unique, 0-based

  BipartiteGraph transposed() const;

  int vertex_count() const { return left_count + right_count; }
  int degree_left(int v) const;
  int degree_right(int v) const;
  bool has_isolated_vertex() const;
  int component_count() const;

  // adjacency-list JSON for the CLI debug dump
  std::string to_adjacency_json() const;

  bool operator==(const BipartiteGraph& other) const = default;
};

BipartiteGraph graph_of(const Permutation& sigma1, const Permutation& sigma2);

/// N^lambda(G): colorings of the left vertices by columns and of the right
/// vertices by rows such that every edge lands on a box of lambda. Iterates
/// row assignments on the cheaper side and closes each opposite vertex with
/// a min-of-rows factor. Graphs with isolated vertices are rejected: the
/// count would depend on an invented convention.
Int count_colorings(const YoungDiagram& lambda, const BipartiteGraph& graph);

// N-tilde: one-to-one maps from points to boxes, rows constant on cycles of
// sigma2 and columns constant on cycles of sigma1; brute force, meant for
// degree <= 6 and n <= 12
Int count_injective(const YoungDiagram& lambda, const Permutation& sigma1,
                    const Permutation& sigma2);

// N-hat: same without injectivity; equals
// count_colorings(lambda, graph_of(sigma1, sigma2))
Int count_all_functions(const YoungDiagram& lambda, const Permutation& sigma1,
                        const Permutation& sigma2);

// repeatedly removes the lexicographically smallest edge joining two
// vertices of degree > 1; the result is a disjoint union of stars
BipartiteGraph prune(BipartiteGraph graph);

} // namespace symchar
