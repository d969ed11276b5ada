#include "symchar/coloring_counter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symchar {

ColoringCounter::ColoringCounter(YoungDiagram lambda)
    : lambda_(std::move(lambda)), conjugate_(lambda_.conjugate())
{
  log_rows_ = std::log(static_cast<double>(std::max(lambda_.row_count(), 1)));
  log_cols_ = std::log(static_cast<double>(std::max(lambda_.col_count(), 1)));
}

template <class Acc>
Acc ColoringCounter::run_kernel(const std::vector<int>& palette,
                                int outer_count, int inner_count)
{
  const int colors = static_cast<int>(palette.size());
  if (outer_count == 0)
    return inner_count == 0 ? Acc(1) : Acc(0);
  if (colors == 0)
    return 0;
  assignment_.assign(static_cast<std::size_t>(outer_count), 0);
  Acc total = 0;
  while (true) {
    Acc product = 1;
    for (int v = 0; v < inner_count; ++v) {
      const int begin = adjacency_offset_[static_cast<std::size_t>(v)];
      const int end = adjacency_offset_[static_cast<std::size_t>(v) + 1];
      int min_len = palette[static_cast<std::size_t>(
          assignment_[static_cast<std::size_t>(adjacency_[
              static_cast<std::size_t>(begin)])])];
      for (int e = begin + 1; e < end; ++e)
        min_len = std::min(min_len,
                           palette[static_cast<std::size_t>(assignment_[
                               static_cast<std::size_t>(adjacency_[
                                   static_cast<std::size_t>(e)])])]);
      product *= min_len;
      if (product == 0)
        break;
    }
    total += product;
    int pos = 0;
    for (; pos < outer_count; ++pos) {
      if (++assignment_[static_cast<std::size_t>(pos)] < colors)
        break;
      assignment_[static_cast<std::size_t>(pos)] = 0;
    }
    if (pos == outer_count)
      break;
  }
  return total;
}

Int ColoringCounter::count_labels(const std::vector<int>& left_of,
                                  int left_count,
                                  const std::vector<int>& right_of,
                                  int right_count)
{
  const int l = static_cast<int>(left_of.size());
  if (l == 0)
    return 1;
  if (l > 16)
    throw std::invalid_argument("ColoringCounter: degree must be <= 16");

  // 4 bits per label plus the degree in the top nibble; degree 16 would
  // not fit, so it bypasses the memo
  const bool use_memo = l <= 15;
  std::uint64_t key_left = 0;
  std::uint64_t key_right = 0;
  if (use_memo) {
    for (int i = 0; i < l; ++i) {
      key_left = key_left << 4 | static_cast<std::uint64_t>(left_of[
          static_cast<std::size_t>(i)]);
      key_right = key_right << 4 | static_cast<std::uint64_t>(right_of[
          static_cast<std::size_t>(i)]);
    }
    key_left |= static_cast<std::uint64_t>(l) << 60;
  }
  const auto memo_key = std::make_pair(key_left, key_right);
  if (use_memo)
    if (auto it = memo_.find(memo_key); it != memo_.end())
      return it->second;

  // unique edges as bit rows: edge_mask_[u] has bit v set
  edge_mask_.assign(static_cast<std::size_t>(left_count), 0);
  for (int i = 0; i < l; ++i)
    edge_mask_[static_cast<std::size_t>(left_of[static_cast<std::size_t>(i)])] |=
        std::uint32_t(1) << right_of[static_cast<std::size_t>(i)];

  // iterate assignments on the cheaper side: rows on the right vertices, or
  // columns on the left vertices through the conjugate diagram
  const bool flip = left_count * log_cols_ < right_count * log_rows_;
  const std::vector<int>& palette = flip ? conjugate_.rows() : lambda_.rows();
  const int outer_count = flip ? left_count : right_count;
  const int inner_count = flip ? right_count : left_count;

  adjacency_offset_.assign(static_cast<std::size_t>(inner_count) + 1, 0);
  adjacency_.clear();
  if (!flip) {
    for (int u = 0; u < left_count; ++u) {
      adjacency_offset_[static_cast<std::size_t>(u)] =
          static_cast<int>(adjacency_.size());
      for (int v = 0; v < right_count; ++v)
        if (edge_mask_[static_cast<std::size_t>(u)] >> v & 1)
          adjacency_.push_back(v);
    }
  } else {
    for (int v = 0; v < right_count; ++v) {
      adjacency_offset_[static_cast<std::size_t>(v)] =
          static_cast<int>(adjacency_.size());
      for (int u = 0; u < left_count; ++u)
        if (edge_mask_[static_cast<std::size_t>(u)] >> v & 1)
          adjacency_.push_back(u);
    }
  }
  adjacency_offset_[static_cast<std::size_t>(inner_count)] =
      static_cast<int>(adjacency_.size());

  const double bound_log =
      left_count * log_cols_ + right_count * log_rows_;
  Int result;
  if (bound_log < 61.0 * std::log(2.0))
    result = Int(run_kernel<std::uint64_t>(palette, outer_count, inner_count));
  else
    result = run_kernel<Int>(palette, outer_count, inner_count);
  if (use_memo)
    memo_.emplace(memo_key, result);
  return result;
}

} // namespace symchar
