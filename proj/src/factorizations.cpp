#include "symchar/factorizations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symchar {

std::uint64_t factorial_u64(int l)
{
  if (l < 0 || l > 20)
    throw std::invalid_argument("factorial_u64: l must be in [0, 20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= l; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation nth_permutation(int degree, std::uint64_t rank)
{
  if (rank >= factorial_u64(degree))
    throw std::invalid_argument("nth_permutation: rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(degree));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> images;
  images.reserve(pool.size());
  std::uint64_t base = factorial_u64(degree);
  for (int i = degree; i >= 1; --i) {
    base /= static_cast<std::uint64_t>(i);
    const auto idx = static_cast<std::size_t>(rank / base);
    rank %= base;
    images.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(images));
}

std::vector<Factorization> minimal_factorizations_filter(const Permutation& pi)
{
  const int target = pi.cayley_length();
  std::vector<Factorization> out;
  for_each_factorization(pi, [&](const Permutation& s1, const Permutation& s2) {
    if (s1.cayley_length() + s2.cayley_length() == target)
      out.push_back({s1, s2});
  });
  return out;
}

namespace {

/// Enumerates non-crossing partitions of {0, ..., k-1}. A pending segment
/// [lo, hi) is split by the block of its first element; the gaps between
/// consecutive block members are independent segments.
class NoncrossingEnumerator {
public:
  explicit NoncrossingEnumerator(int k) : k_(k) {}

  std::vector<std::vector<std::vector<int>>> run()
  {
    out_.clear();
    acc_.clear();
    pending_.clear();
    if (k_ > 0)
      pending_.push_back({0, k_});
    rec();
    return std::move(out_);
  }

private:
  void rec()
  {
    if (pending_.empty()) {
      out_.push_back(acc_);
      return;
    }
    const auto [lo, hi] = pending_.back();
    pending_.pop_back();
    block_.assign(1, lo);
    choose(lo + 1, hi);
    pending_.push_back({lo, hi});
  }

  // block_ holds lo plus members chosen so far, all < from
  void choose(int from, int hi)
  {
    close_block(hi);
    for (int next = from; next < hi; ++next) {
      block_.push_back(next);
      choose(next + 1, hi);
      block_.pop_back();
    }
  }

  void close_block(int hi)
  {
    const std::vector<int> members = block_;
    acc_.push_back(members);
    const std::size_t mark = pending_.size();
    for (std::size_t m = 0; m + 1 < members.size(); ++m)
      if (members[m] + 1 < members[m + 1])
        pending_.push_back({members[m] + 1, members[m + 1]});
    if (members.back() + 1 < hi)
      pending_.push_back({members.back() + 1, hi});
    rec();
    pending_.resize(mark);
    acc_.pop_back();
    block_ = members;
  }

  int k_;
  std::vector<std::pair<int, int>> pending_;
  std::vector<int> block_;
  std::vector<std::vector<int>> acc_;
  std::vector<std::vector<std::vector<int>>> out_;
};

} // namespace

std::vector<Factorization> minimal_factorizations_noncrossing(const Permutation& pi)
{
  const int l = pi.degree();
  // per cycle of pi: the admissible restrictions of sigma2, each a list of
  // sigma2-cycles; a block {i_0 < i_1 < ...} of positions along the cycle
  // becomes the sigma2-cycle (cycle[i_0] cycle[i_1] ...)
  std::vector<std::vector<std::vector<std::vector<int>>>> per_cycle;
  for (const auto& cycle : pi.cycles()) {
    const int k = static_cast<int>(cycle.size());
    std::vector<std::vector<std::vector<int>>> choices;
    for (const auto& partition : NoncrossingEnumerator(k).run()) {
      std::vector<std::vector<int>> sigma2_cycles;
      for (const auto& block : partition) {
        std::vector<int> mapped;
        mapped.reserve(block.size());
        for (int position : block)
          mapped.push_back(cycle[static_cast<std::size_t>(position)]);
        sigma2_cycles.push_back(std::move(mapped));
      }
      choices.push_back(std::move(sigma2_cycles));
    }
    per_cycle.push_back(std::move(choices));
  }

  std::vector<Factorization> out;
  if (per_cycle.empty()) {
    out.push_back({Permutation(l), Permutation(l)});
    return out;
  }
  std::vector<std::size_t> pick(per_cycle.size(), 0);
  while (true) {
    std::vector<std::vector<int>> sigma2_cycles;
    for (std::size_t c = 0; c < per_cycle.size(); ++c)
      for (const auto& block : per_cycle[c][pick[c]])
        sigma2_cycles.push_back(block);
    Permutation sigma2 = Permutation::from_cycles(l, sigma2_cycles);
    out.push_back({pi * sigma2.inverse(), sigma2});
    std::size_t c = 0;
    for (; c < pick.size(); ++c) {
      if (++pick[c] < per_cycle[c].size())
        break;
      pick[c] = 0;
    }
    if (c == pick.size())
      break;
  }
  return out;
}

std::vector<Factorization> minimal_factorizations(const Permutation& pi)
{
  constexpr int kFilterThreshold = 6;
  if (pi.degree() <= kFilterThreshold)
    return minimal_factorizations_filter(pi);
  return minimal_factorizations_noncrossing(pi);
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n))
  {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x)
  {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }

  void unite(int a, int b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[static_cast<std::size_t>(a)] = b;
  }

  int components()
  {
    int count = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i)
        ++count;
    return count;
  }
};

} // namespace

int orbit_count(const Permutation& sigma1, const Permutation& sigma2)
{
  if (sigma1.degree() != sigma2.degree())
    throw std::invalid_argument("orbit_count: degrees must match");
  UnionFind uf(sigma1.degree());
  for (int i = 0; i < sigma1.degree(); ++i) {
    uf.unite(i, sigma1(i));
    uf.unite(i, sigma2(i));
  }
  return uf.components();
}

int defect(const Permutation& sigma1, const Permutation& sigma2)
{
  return sigma1.degree() - sigma1.cycle_count() - sigma2.cycle_count() +
         orbit_count(sigma1, sigma2);
}

std::pair<Permutation, Permutation> normal_form(const Permutation& sigma1,
                                                const Permutation& sigma2)
{
  if (sigma1.degree() != sigma2.degree())
    throw std::invalid_argument("normal_form: degrees must match");
  const int l = sigma1.degree();
  Permutation s1 = sigma1;
  Permutation s2 = sigma2;
  std::vector<int> cycle1_of(static_cast<std::size_t>(l));
  std::vector<int> cycle2_of(static_cast<std::size_t>(l));
  while (true) {
    int index = 0;
    for (const auto& cycle : s1.cycles()) {
      for (int point : cycle)
        cycle1_of[static_cast<std::size_t>(point)] = index;
      ++index;
    }
    index = 0;
    for (const auto& cycle : s2.cycles()) {
      for (int point : cycle)
        cycle2_of[static_cast<std::size_t>(point)] = index;
      ++index;
    }
    // lexicographically smallest (a, b) sharing a cycle of s1 but not of s2
    int found_a = -1;
    int found_b = -1;
    for (int a = 0; a < l && found_a < 0; ++a)
      for (int b = a + 1; b < l; ++b)
        if (cycle1_of[static_cast<std::size_t>(a)] ==
                cycle1_of[static_cast<std::size_t>(b)] &&
            cycle2_of[static_cast<std::size_t>(a)] !=
                cycle2_of[static_cast<std::size_t>(b)]) {
          found_a = a;
          found_b = b;
          break;
        }
    if (found_a < 0)
      return {s1, s2};
    const Permutation swap = Permutation::from_cycles(l, {{found_a, found_b}});
    s1 = s1 * swap;
    s2 = swap * s2;
  }
}

std::vector<Int> count_by_length(int l)
{
  if (l < 1)
    throw std::invalid_argument("count_by_length: l must be >= 1");
  std::vector<Int> coeff{1};
  for (int j = 1; j < l; ++j) {
    std::vector<Int> next(coeff.size() + 1, 0);
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      next[i] += coeff[i];
      next[i + 1] += coeff[i] * j;
    }
    coeff = std::move(next);
  }
  return coeff;
}

Permutation direct_product(const std::vector<Permutation>& blocks)
{
  std::vector<int> images;
  int offset = 0;
  for (const auto& block : blocks) {
    for (int i = 0; i < block.degree(); ++i)
      images.push_back(block(i) + offset);
    offset += block.degree();
  }
  return Permutation(std::move(images));
}

} // namespace symchar
