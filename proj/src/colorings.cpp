#include "symchar/colorings.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace symchar {

BipartiteGraph BipartiteGraph::transposed() const
{
  BipartiteGraph t;
  t.left_count = right_count;
  t.right_count = left_count;
  t.edges.reserve(edges.size());
  for (const auto& [u, v] : edges)
    t.edges.emplace_back(v, u);
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

int BipartiteGraph::degree_left(int v) const
{
  int d = 0;
  for (const auto& [u, _] : edges)
    if (u == v)
      ++d;
  return d;
}

int BipartiteGraph::degree_right(int v) const
{
  int d = 0;
  for (const auto& [_, w] : edges)
    if (w == v)
      ++d;
  return d;
}

bool BipartiteGraph::has_isolated_vertex() const
{
  std::vector<char> seen_left(static_cast<std::size_t>(left_count), 0);
  std::vector<char> seen_right(static_cast<std::size_t>(right_count), 0);
  for (const auto& [u, v] : edges) {
    seen_left[static_cast<std::size_t>(u)] = 1;
    seen_right[static_cast<std::size_t>(v)] = 1;
  }
  return std::find(seen_left.begin(), seen_left.end(), 0) != seen_left.end() ||
         std::find(seen_right.begin(), seen_right.end(), 0) != seen_right.end();
}

int BipartiteGraph::component_count() const
{
  const int total = vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& [u, v] : edges) {
    const int a = find(u);
    const int b = find(left_count + v);
    if (a != b)
      parent[static_cast<std::size_t>(a)] = b;
  }
  int count = 0;
  for (int i = 0; i < total; ++i)
    if (find(i) == i)
      ++count;
  return count;
}

std::string BipartiteGraph::to_adjacency_json() const
{
  nlohmann::json adjacency;
  adjacency["left_count"] = left_count;
  adjacency["right_count"] = right_count;
  auto& list = adjacency["edges"];
  list = nlohmann::json::array();
  for (const auto& [u, v] : edges)
    list.push_back({u, v});
  return adjacency.dump();
}

BipartiteGraph graph_of(const Permutation& sigma1, const Permutation& sigma2)
{
  if (sigma1.degree() != sigma2.degree())
    throw std::invalid_argument("graph_of: degrees must match");
  if (sigma1.degree() < 1)
    throw std::invalid_argument("graph_of: degree must be >= 1");
  const int l = sigma1.degree();
  std::vector<int> left_of(static_cast<std::size_t>(l));
  std::vector<int> right_of(static_cast<std::size_t>(l));
  BipartiteGraph g;
  for (const auto& cycle : sigma1.cycles()) {
    for (int point : cycle)
      left_of[static_cast<std::size_t>(point)] = g.left_count;
    ++g.left_count;
  }
  for (const auto& cycle : sigma2.cycles()) {
    for (int point : cycle)
      right_of[static_cast<std::size_t>(point)] = g.right_count;
    ++g.right_count;
  }
  g.edges.reserve(static_cast<std::size_t>(l));
  for (int point = 0; point < l; ++point)
    g.edges.emplace_back(left_of[static_cast<std::size_t>(point)],
                         right_of[static_cast<std::size_t>(point)]);
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

namespace {

// row assignments run over the right side; each left vertex contributes the
// minimum of lambda over its neighbours' rows
template <class Acc>
Acc count_colorings_rows(const std::vector<int>& rows,
                         const BipartiteGraph& g)
{
  const int r = static_cast<int>(rows.size());
  std::vector<std::vector<int>> left_neighbours(
      static_cast<std::size_t>(g.left_count));
  for (const auto& [u, v] : g.edges)
    left_neighbours[static_cast<std::size_t>(u)].push_back(v);

  Acc total = 0;
  if (g.right_count == 0) {
    // single empty assignment; left vertices would be isolated (rejected
    // earlier), so the product is empty
    return 1;
  }
  if (r == 0)
    return 0;
  std::vector<int> assignment(static_cast<std::size_t>(g.right_count), 0);
  while (true) {
    Acc product = 1;
    for (const auto& neighbours : left_neighbours) {
      int min_len = rows[static_cast<std::size_t>(assignment[
          static_cast<std::size_t>(neighbours[0])])];
      for (std::size_t i = 1; i < neighbours.size(); ++i)
        min_len = std::min(
            min_len, rows[static_cast<std::size_t>(assignment[
                         static_cast<std::size_t>(neighbours[i])])]);
      product *= min_len;
      if (product == 0)
        break;
    }
    total += product;
    int pos = 0;
    for (; pos < g.right_count; ++pos) {
      if (++assignment[static_cast<std::size_t>(pos)] < r)
        break;
      assignment[static_cast<std::size_t>(pos)] = 0;
    }
    if (pos == g.right_count)
      break;
  }
  return total;
}

} // namespace

Int count_colorings(const YoungDiagram& lambda, const BipartiteGraph& graph)
{
  if (graph.has_isolated_vertex())
    throw std::invalid_argument(
        "count_colorings: graph has an isolated vertex (count ill-defined)");
  if (lambda.box_count() == 0)
    return graph.vertex_count() == 0 ? Int(1) : Int(0);

  // iterate the cheaper side, flipping through the conjugate diagram
  const double log_r = std::log(static_cast<double>(lambda.row_count()));
  const double log_c = std::log(static_cast<double>(lambda.col_count()));
  const bool flip = graph.left_count * log_c < graph.right_count * log_r;
  const YoungDiagram shape = flip ? lambda.conjugate() : lambda;
  const BipartiteGraph g = flip ? graph.transposed() : graph;

  // machine-word fast path when the worst-case sum cannot overflow
  const double bound_log = g.right_count * std::log(static_cast<double>(
                               std::max(shape.row_count(), 1))) +
                           g.left_count * std::log(static_cast<double>(
                               std::max(shape.col_count(), 1)));
  if (bound_log < 61.0 * std::log(2.0))
    return Int(count_colorings_rows<std::uint64_t>(shape.rows(), g));
  return count_colorings_rows<Int>(shape.rows(), g);
}

namespace {

Int count_box_maps(const YoungDiagram& lambda, const Permutation& sigma1,
                   const Permutation& sigma2, bool injective)
{
  if (sigma1.degree() != sigma2.degree())
    throw std::invalid_argument("count_box_maps: degrees must match");
  const int l = sigma1.degree();
  const auto boxes = lambda.boxes();
  const int n = static_cast<int>(boxes.size());
  if (injective && l > n)
    throw std::invalid_argument(
        "count_injective: degree exceeds the number of boxes (no injections)");

  std::vector<int> cycle1_of(static_cast<std::size_t>(l));
  std::vector<int> cycle2_of(static_cast<std::size_t>(l));
  int cycles1 = 0;
  int cycles2 = 0;
  for (const auto& cycle : sigma1.cycles()) {
    for (int point : cycle)
      cycle1_of[static_cast<std::size_t>(point)] = cycles1;
    ++cycles1;
  }
  for (const auto& cycle : sigma2.cycles()) {
    for (int point : cycle)
      cycle2_of[static_cast<std::size_t>(point)] = cycles2;
    ++cycles2;
  }

  std::vector<int> col_of_cycle(static_cast<std::size_t>(cycles1), 0);
  std::vector<int> row_of_cycle(static_cast<std::size_t>(cycles2), 0);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  Int total = 0;

  auto rec = [&](auto&& self, int point) -> void {
    if (point == l) {
      ++total;
      return;
    }
    const int c1 = cycle1_of[static_cast<std::size_t>(point)];
    const int c2 = cycle2_of[static_cast<std::size_t>(point)];
    const int need_col = col_of_cycle[static_cast<std::size_t>(c1)];
    const int need_row = row_of_cycle[static_cast<std::size_t>(c2)];
    for (int b = 0; b < n; ++b) {
      if (injective && used[static_cast<std::size_t>(b)])
        continue;
      const auto [col, row] = boxes[static_cast<std::size_t>(b)];
      if (need_col != 0 && col != need_col)
        continue;
      if (need_row != 0 && row != need_row)
        continue;
      col_of_cycle[static_cast<std::size_t>(c1)] = col;
      row_of_cycle[static_cast<std::size_t>(c2)] = row;
      used[static_cast<std::size_t>(b)] = 1;
      self(self, point + 1);
      used[static_cast<std::size_t>(b)] = 0;
      col_of_cycle[static_cast<std::size_t>(c1)] = need_col;
      row_of_cycle[static_cast<std::size_t>(c2)] = need_row;
    }
  };
  rec(rec, 0);
  return total;
}

} // namespace

Int count_injective(const YoungDiagram& lambda, const Permutation& sigma1,
                    const Permutation& sigma2)
{
  return count_box_maps(lambda, sigma1, sigma2, true);
}

Int count_all_functions(const YoungDiagram& lambda, const Permutation& sigma1,
                        const Permutation& sigma2)
{
  return count_box_maps(lambda, sigma1, sigma2, false);
}

BipartiteGraph prune(BipartiteGraph graph)
{
  if (graph.has_isolated_vertex())
    throw std::invalid_argument("prune: graph has an isolated vertex");
  std::vector<int> deg_left(static_cast<std::size_t>(graph.left_count), 0);
  std::vector<int> deg_right(static_cast<std::size_t>(graph.right_count), 0);
  for (const auto& [u, v] : graph.edges) {
    ++deg_left[static_cast<std::size_t>(u)];
    ++deg_right[static_cast<std::size_t>(v)];
  }
  // edges are kept sorted, so scanning front to back removes the
  // lexicographically smallest eligible edge first
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
      const auto [u, v] = graph.edges[i];
      if (deg_left[static_cast<std::size_t>(u)] > 1 &&
          deg_right[static_cast<std::size_t>(v)] > 1) {
        --deg_left[static_cast<std::size_t>(u)];
        --deg_right[static_cast<std::size_t>(v)];
        graph.edges.erase(graph.edges.begin() +
                          static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;
      }
    }
  }
  return graph;
}

} // namespace symchar
