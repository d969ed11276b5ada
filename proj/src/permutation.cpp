#include "symchar/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symchar {

Permutation::Permutation(int degree)
{
  if (degree < 0)
    throw std::invalid_argument("Permutation: degree must be nonnegative");
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
  const int l = degree();
  std::vector<char> seen(static_cast<std::size_t>(l), 0);
  for (int img : images_) {
    if (img < 0 || img >= l || seen[static_cast<std::size_t>(img)])
      throw std::invalid_argument("Permutation: images must form a bijection");
    seen[static_cast<std::size_t>(img)] = 1;
  }
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>>& cycles)
{
  Permutation result(degree);
  std::vector<char> used(static_cast<std::size_t>(degree), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= degree)
        throw std::invalid_argument("Permutation::from_cycles: point out of range");
      if (used[static_cast<std::size_t>(from)])
        throw std::invalid_argument("Permutation::from_cycles: repeated point");
      used[static_cast<std::size_t>(from)] = 1;
      result.images_[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::move(result.images_));
}

bool Permutation::is_identity() const
{
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i)
    inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("Permutation: composing different degrees");
  std::vector<int> images(a.images_.size());
  for (int i = 0; i < a.degree(); ++i)
    images[static_cast<std::size_t>(i)] = a(b(i));
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles() const
{
  std::vector<std::vector<int>> result;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    std::vector<int> cycle;
    int point = start;
    do {
      seen[static_cast<std::size_t>(point)] = 1;
      cycle.push_back(point);
      point = images_[static_cast<std::size_t>(point)];
    } while (point != start);
    result.push_back(std::move(cycle));
  }
  return result;
}

int Permutation::cycle_count() const
{
  std::vector<char> seen(images_.size(), 0);
  int count = 0;
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)])
      continue;
    ++count;
    int point = start;
    do {
      seen[static_cast<std::size_t>(point)] = 1;
      point = images_[static_cast<std::size_t>(point)];
    } while (point != start);
  }
  return count;
}

int Permutation::cayley_length() const
{
  return degree() - cycle_count();
}

std::string Permutation::to_string() const
{
  if (degree() == 0)
    return "()";
  std::ostringstream out;
  for (const auto& cycle : cycles()) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0)
        out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts))
{
  for (int part : parts_)
    if (part < 1)
      throw std::invalid_argument("CycleType: parts must be >= 1");
  std::sort(parts_.rbegin(), parts_.rend());
}

CycleType CycleType::parse(const std::string& text)
{
  std::vector<int> parts;
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
      throw std::invalid_argument("CycleType::parse: bad part '" + item + "'");
    }
    if (used != item.size())
      throw std::invalid_argument("CycleType::parse: bad part '" + item + "'");
    parts.push_back(value);
  }
  return CycleType(std::move(parts));
}

CycleType CycleType::of(const Permutation& sigma, bool include_fixed_points)
{
  std::vector<int> parts;
  for (const auto& cycle : sigma.cycles()) {
    if (cycle.size() >= 2 || include_fixed_points)
      parts.push_back(static_cast<int>(cycle.size()));
  }
  return CycleType(std::move(parts));
}

int CycleType::weight() const
{
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int CycleType::support() const
{
  int total = 0;
  for (int part : parts_)
    if (part >= 2)
      total += part;
  return total;
}

int CycleType::pi_length() const
{
  int total = 0;
  for (int part : parts_)
    total += part - 1;
  return total;
}

CycleType CycleType::nontrivial() const
{
  std::vector<int> parts;
  for (int part : parts_)
    if (part >= 2)
      parts.push_back(part);
  return CycleType(std::move(parts));
}

CycleType CycleType::padded_to(int n) const
{
  const int w = weight();
  if (w > n)
    throw std::invalid_argument("CycleType::padded_to: weight exceeds target degree");
  std::vector<int> parts = parts_;
  parts.insert(parts.end(), static_cast<std::size_t>(n - w), 1);
  return CycleType(std::move(parts));
}

Permutation CycleType::canonical_permutation() const
{
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (int part : parts_) {
    std::vector<int> cycle(static_cast<std::size_t>(part));
    std::iota(cycle.begin(), cycle.end(), next);
    next += part;
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(next, cycles);
}

std::string CycleType::to_string() const
{
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void cycle_types_rec(int remaining, int max_part, std::vector<int>& acc,
                     std::vector<CycleType>& out)
{
  if (remaining == 0) {
    out.push_back(CycleType(acc));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 2; --part) {
    if (remaining - part == 1)
      continue; // no part of size one allowed
    acc.push_back(part);
    cycle_types_rec(remaining - part, part, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<CycleType> cycle_types_with_support(int l)
{
  if (l < 0)
    throw std::invalid_argument("cycle_types_with_support: l must be nonnegative");
  std::vector<CycleType> out;
  if (l == 1)
    return out; // a single moved point is impossible
  std::vector<int> acc;
  cycle_types_rec(l, l, acc, out);
  return out;
}

std::vector<CycleType> cycle_type_corpus(int max_support)
{
  std::vector<CycleType> out;
  for (int l = 0; l <= max_support; ++l) {
    auto ts = cycle_types_with_support(l);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

} // namespace symchar
