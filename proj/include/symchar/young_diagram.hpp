#pragma once

#include "symchar/exact.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace symchar {

/// Integer partition drawn as a Young diagram in the French convention:
/// row 1 is the bottom row and the box (p, q) sits in column p of row q.
/// Diagrams are immutable values; the empty diagram is legal and stands
/// for n = 0.
class YoungDiagram {
public:
  YoungDiagram() = default;

  // rows must be weakly decreasing and strictly positive
  explicit YoungDiagram(std::vector<int> rows);

  // comma-separated row lengths, e.g. "4,2,1"; "" is the empty diagram
  static YoungDiagram parse(const std::string& text);

  const std::vector<int>& rows() const { return rows_; }
  int box_count() const { return box_count_; }                      // n
  int row_count() const { return static_cast<int>(rows_.size()); } // r
  int col_count() const { return rows_.empty() ? 0 : rows_[0]; }   // c

  // lambda_q for 1 <= q; zero beyond the last row
  int row_length(int q) const;

  // box membership, 1-based (column, row)
  bool contains_box(int col, int row) const;

  YoungDiagram conjugate() const;

  // each row length multiplied by c and each row repeated c times
  YoungDiagram dilated(int c) const;

  // boxes as (col, row) pairs, sorted by row then column
  std::vector<std::pair<int, int>> boxes() const;

  std::string to_string() const;

  bool operator==(const YoungDiagram& other) const = default;
  auto operator<=>(const YoungDiagram& other) const = default;

private:
  std::vector<int> rows_;
  int box_count_ = 0;
};

// p_i rows of length q_i; q must be weakly decreasing so the result is a
// partition, zero-length rows are dropped
YoungDiagram realize_multirectangular(const std::vector<int>& p,
                                      const std::vector<int>& q);

// all partitions of n in descending lexicographic order; n = 0 gives the
// empty diagram
std::vector<YoungDiagram> partitions_of(int n);

// corpus of all diagrams with 1 <= n <= n_max, ordered by n then shape
std::vector<YoungDiagram> diagram_corpus(int n_max);

} // namespace symchar
