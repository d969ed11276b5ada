#pragma once

#include "symchar/exact.hpp"
#include "symchar/young_diagram.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace symchar {

/// Batch evaluation of N^lambda against one fixed diagram, fed directly with
/// per-point cycle labels instead of graph objects. The factorization sums
/// call this millions of times, so it keeps reusable workspaces and memoizes
/// on the labelled graph (labels are canonical because cycles are numbered in
/// first-occurrence order).
class ColoringCounter {
public:
  explicit ColoringCounter(YoungDiagram lambda);

  const YoungDiagram& diagram() const { return lambda_; }

  /// N^lambda of the factorization whose sigma1-cycle (resp. sigma2-cycle)
  /// of point i is left_of[i] (resp. right_of[i]). Labels must be numbered
  /// in first-occurrence order; degree <= 16.
  Int count_labels(const std::vector<int>& left_of, int left_count,
                   const std::vector<int>& right_of, int right_count);

private:
  struct KeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const
    {
      return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ull ^ k.second);
    }
  };

  template <class Acc>
  Acc run_kernel(const std::vector<int>& palette, int outer_count,
                 int inner_count);

  YoungDiagram lambda_;
  YoungDiagram conjugate_;
  double log_rows_ = 0.0;
  double log_cols_ = 0.0;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Int, KeyHash> memo_;

  // workspaces
  std::vector<std::uint32_t> edge_mask_;
  std::vector<int> adjacency_;
  std::vector<int> adjacency_offset_;
  std::vector<int> assignment_;
};

} // namespace symchar
