#pragma once

#include "symchar/exact.hpp"
#include "symchar/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace symchar {

struct Factorization {
  Permutation sigma1;
  Permutation sigma2;

  bool operator==(const Factorization& other) const = default;
  auto operator<=>(const Factorization& other) const = default;
};

// l! as a machine word; l <= 20
std::uint64_t factorial_u64(int l);

// lexicographic unranking of image vectors, rank in [0, degree!)
Permutation nth_permutation(int degree, std::uint64_t rank);

/// Streams all degree! factorizations sigma1 * sigma2 = pi, with sigma2
/// running through S_l in lexicographic order of its image vector and
/// sigma1 = pi * sigma2^{-1}. The [begin, end) overload exposes a
/// splittable range for parallel consumption.
template <class Visitor>
void for_each_factorization_range(const Permutation& pi, std::uint64_t begin,
                                  std::uint64_t end, Visitor&& visit)
{
  if (begin >= end)
    return;
  Permutation sigma2 = nth_permutation(pi.degree(), begin);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    visit(pi * sigma2.inverse(), sigma2);
    if (rank + 1 < end) {
      auto images = sigma2.images();
      std::next_permutation(images.begin(), images.end());
      sigma2 = Permutation(std::move(images));
    }
  }
}

template <class Visitor>
void for_each_factorization(const Permutation& pi, Visitor&& visit)
{
  for_each_factorization_range(pi, 0, factorial_u64(pi.degree()),
                               std::forward<Visitor>(visit));
}

// all (sigma1, sigma2) with sigma1 * sigma2 = pi and
// |sigma1| + |sigma2| = |pi|; the filter route is used up to degree 6,
// the non-crossing route above
std::vector<Factorization> minimal_factorizations(const Permutation& pi);

// oracle route: filter the full factorization stream by length
std::vector<Factorization> minimal_factorizations_filter(const Permutation& pi);

// fast route: per cycle of pi, blocks of a non-crossing partition of the
// cycle's points (in cycle order) give sigma2; products across cycles
std::vector<Factorization> minimal_factorizations_noncrossing(const Permutation& pi);

// number of orbits of <sigma1, sigma2> acting on the points
int orbit_count(const Permutation& sigma1, const Permutation& sigma2);

// o(sigma1, sigma2) = l - |C(sigma1)| - |C(sigma2)| + orbits
int defect(const Permutation& sigma1, const Permutation& sigma2);

// rewrites the pair so that every cycle of the first component lies inside
// a cycle of the second, preserving the product and the total length; the
// first component's length equals defect(sigma1, sigma2)
std::pair<Permutation, Permutation> normal_form(const Permutation& sigma1,
                                                const Permutation& sigma2);

// count[i] = #{sigma in S_l : |sigma| = i}, as coefficients of
// (1+x)(1+2x)...(1+(l-1)x)
std::vector<Int> count_by_length(int l);

// pi = direct product of the blocks on consecutive point ranges
Permutation direct_product(const std::vector<Permutation>& blocks);

/// Factorizations sigma1 * sigma2 = block_1 x ... x block_r such that
/// sigma1, sigma2 together with the Young subgroup of the blocks act
/// transitively on all points.
template <class Visitor>
void for_each_transitive_factorization(const std::vector<Permutation>& blocks,
                                       Visitor&& visit)
{
  const Permutation pi = direct_product(blocks);
  std::vector<int> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    block_of.insert(block_of.end(),
                    static_cast<std::size_t>(blocks[b].degree()),
                    static_cast<int>(b));
  const int r = static_cast<int>(blocks.size());
  for_each_factorization(pi, [&](const Permutation& s1, const Permutation& s2) {
    // union-find over blocks joined by cycles of sigma1 and sigma2
    std::vector<int> parent(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
      parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x)
        x = parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b)
        parent[static_cast<std::size_t>(a)] = b;
    };
    for (int i = 0; i < pi.degree(); ++i) {
      unite(block_of[static_cast<std::size_t>(i)],
            block_of[static_cast<std::size_t>(s1(i))]);
      unite(block_of[static_cast<std::size_t>(i)],
            block_of[static_cast<std::size_t>(s2(i))]);
    }
    int components = 0;
    for (int i = 0; i < r; ++i)
      if (find(i) == i)
        ++components;
    if (components <= 1)
      visit(s1, s2);
  });
}

} // namespace symchar
