#pragma once

#include <compare>
#include <string>
#include <vector>

namespace symchar {

/// Element of S_l acting on the points {0, ..., l-1}. Composition follows
/// (a * b)(i) = a(b(i)), i.e. the right factor acts first.
class Permutation {
public:
  Permutation() = default;

  // identity of the given degree
  explicit Permutation(int degree);

  // images[i] = image of point i; must be a bijection
  explicit Permutation(std::vector<int> images);

  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  Permutation inverse() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  // disjoint cycles covering all points, fixed points included; each cycle
  // starts at its minimum and cycles are sorted by minimum
  std::vector<std::vector<int>> cycles() const;

  int cycle_count() const;

  // |sigma| = degree - number of cycles = minimal number of transpositions
  int cayley_length() const;

  // cycle structure as a string, e.g. "(0 2)(1)"
  std::string to_string() const;

  bool operator==(const Permutation& other) const = default;
  auto operator<=>(const Permutation& other) const = default;

private:
  std::vector<int> images_;
};

/// Conjugacy-class label: multiset of cycle lengths, stored descending.
/// Parts of length one are legal; operations that follow the support-size
/// normalization strip them first via nontrivial().
class CycleType {
public:
  CycleType() = default;

  explicit CycleType(std::vector<int> parts);

  // comma-separated parts, e.g. "3,2"; "" is the empty type
  static CycleType parse(const std::string& text);

  static CycleType of(const Permutation& sigma, bool include_fixed_points);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  // sum of all parts, fixed points included
  int weight() const;

  // sum of the parts of length >= 2 (size of the support)
  int support() const;

  // |pi| = sum of (part - 1); unaffected by fixed points
  int pi_length() const;

  // copy with the parts of length one removed
  CycleType nontrivial() const;

  // copy padded with fixed points up to degree n
  CycleType padded_to(int n) const;

  // cycles on consecutive points, largest cycle first, degree = weight()
  Permutation canonical_permutation() const;

  std::string to_string() const;

  bool operator==(const CycleType& other) const = default;
  auto operator<=>(const CycleType& other) const = default;

private:
  std::vector<int> parts_;
};

// all cycle types with every part >= 2 and support exactly l
std::vector<CycleType> cycle_types_with_support(int l);

// all nontrivial cycle types with support between 0 and max_support
// (the empty type, i.e. the identity class, comes first)
std::vector<CycleType> cycle_type_corpus(int max_support);

} // namespace symchar
