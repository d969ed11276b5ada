#include "symchar/young_diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symchar {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows))
{
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0)
      throw std::invalid_argument("YoungDiagram: row lengths must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("YoungDiagram: rows must be weakly decreasing");
  }
  box_count_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

YoungDiagram YoungDiagram::parse(const std::string& text)
{
  std::vector<int> rows;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty())
      continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("YoungDiagram::parse: bad row length '" + item + "'");
    }
    if (used != item.size())
      throw std::invalid_argument("YoungDiagram::parse: bad row length '" + item + "'");
    rows.push_back(value);
  }
  return YoungDiagram(std::move(rows));
}

int YoungDiagram::row_length(int q) const
{
  if (q < 1)
    throw std::invalid_argument("YoungDiagram::row_length: row index must be >= 1");
  return q <= row_count() ? rows_[q - 1] : 0;
}

bool YoungDiagram::contains_box(int col, int row) const
{
  if (col < 1 || row < 1)
    throw std::invalid_argument("YoungDiagram::contains_box: indices must be >= 1");
  return row <= row_count() && col <= rows_[row - 1];
}

YoungDiagram YoungDiagram::conjugate() const
{
  std::vector<int> cols(col_count(), 0);
  for (int j = 0; j < col_count(); ++j) {
    int count = 0;
    for (int len : rows_)
      if (len >= j + 1)
        ++count;
    cols[j] = count;
  }
  return YoungDiagram(std::move(cols));
}

YoungDiagram YoungDiagram::dilated(int c) const
{
  if (c < 1)
    throw std::invalid_argument("YoungDiagram::dilated: scale must be >= 1");
  std::vector<int> rows;
  rows.reserve(rows_.size() * static_cast<std::size_t>(c));
  for (int len : rows_)
    for (int copy = 0; copy < c; ++copy)
      rows.push_back(len * c);
  return YoungDiagram(std::move(rows));
}

std::vector<std::pair<int, int>> YoungDiagram::boxes() const
{
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(box_count_));
  for (int q = 1; q <= row_count(); ++q)
    for (int p = 1; p <= rows_[q - 1]; ++p)
      out.emplace_back(p, q);
  return out;
}

std::string YoungDiagram::to_string() const
{
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(rows_[i]);
  }
  return out;
}

YoungDiagram realize_multirectangular(const std::vector<int>& p,
                                      const std::vector<int>& q)
{
  if (p.size() != q.size())
    throw std::invalid_argument("realize_multirectangular: p and q must have equal length");
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (p[i] < 1)
      throw std::invalid_argument("realize_multirectangular: multiplicities must be >= 1");
    if (q[i] < 0)
      throw std::invalid_argument("realize_multirectangular: row lengths must be >= 0");
    if (i > 0 && q[i] > q[i - 1])
      throw std::invalid_argument("realize_multirectangular: q must be weakly decreasing");
  }
  std::vector<int> rows;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (q[i] == 0)
      continue;
    for (int copy = 0; copy < p[i]; ++copy)
      rows.push_back(q[i]);
  }
  return YoungDiagram(std::move(rows));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<YoungDiagram>& out)
{
  if (remaining == 0) {
    out.push_back(YoungDiagram(acc));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    acc.push_back(part);
    partitions_rec(remaining - part, part, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<YoungDiagram> partitions_of(int n)
{
  if (n < 0)
    throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<YoungDiagram> out;
  std::vector<int> acc;
  partitions_rec(n, n, acc, out);
  return out;
}

std::vector<YoungDiagram> diagram_corpus(int n_max)
{
  std::vector<YoungDiagram> out;
  for (int n = 1; n <= n_max; ++n) {
    auto ps = partitions_of(n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

} // namespace symchar
