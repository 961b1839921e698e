#pragma once

#include <array>
#include <utility>
#include <vector>

namespace cyclomin {

/// A permutation of {1..n} in one-line notation. images()[k] is the image of
/// position k+1; all positions and values are 1-indexed in the API.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<int> images_;
};

/// (p ∘ q)(k) = p(q(k))
Permutation compose(const Permutation& p, const Permutation& q);

/// Normalized representative of a class of S_n modulo the dihedral subgroup:
/// rep(1) = 1 and rep(2) < rep(n). Construction enforces the normalization.
class PermClass {
 public:
  explicit PermClass(Permutation rep);

  const Permutation& rep() const { return rep_; }
  int n() const { return rep_.n(); }
  const std::vector<int>& images() const { return rep_.images(); }

  bool operator==(const PermClass& o) const { return rep_ == o.rep_; }
  bool operator!=(const PermClass& o) const { return !(*this == o); }
  bool operator<(const PermClass& o) const { return rep_ < o.rep_; }

 private:
  Permutation rep_;
};

/// The unordered value {σ(1), σ(3), σ(5)} of a class at n = 6, stored
/// ascending. Always contains 1 because representatives fix 1.
class Family {
 public:
  explicit Family(std::array<int, 3> odd_set);

  const std::array<int, 3>& odd_set() const { return odd_set_; }

  bool operator==(const Family& o) const { return odd_set_ == o.odd_set_; }
  bool operator!=(const Family& o) const { return !(*this == o); }
  bool operator<(const Family& o) const { return odd_set_ < o.odd_set_; }

 private:
  std::array<int, 3> odd_set_;
};

/// The two generators of the dihedral subgroup: the cyclic shift
/// c(1) = n, c(k) = k-1, and the reversal m(k) = n+1-k.
std::pair<Permutation, Permutation> generators(int n);

/// All 2n elements generated by the shift and the reversal, sorted
/// lexicographically.
std::vector<Permutation> h_group(int n);

/// Right-multiplies p by subgroup elements until the normalization holds.
/// Exactly one of the 2n coset members is normalized.
PermClass canonicalize(const Permutation& p);

/// All (n-1)!/2 normalized representatives in lexicographic order
/// (a single class for n = 3).
std::vector<PermClass> enumerate_representatives(int n);

/// {rep(1), rep(3), rep(5)} at n = 6. The 60 representatives split into
/// 10 families of 6.
Family family_of(const PermClass& p);

/// The arrangement maximizing the numerical radius for every weight
/// sequence: 2 at position ⌊n/2⌋, 1 right of it, even values decreasing to
/// the left, odd values increasing to the right. Returned normalized.
PermClass max_permutation(int n);

}  // namespace cyclomin
