#pragma once

#include <stdexcept>
#include <vector>

#include "cyclomin/perm_group.hpp"

namespace cyclomin {

/// Weights are not strictly increasing.
struct WeightOrderError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A weight is negative.
struct WeightSignError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A strictly increasing sequence of nonnegative weights a_1 < ... < a_n
/// (a_1 = 0 allowed). Immutable; squares, their sum and the product are
/// precomputed.
class WeightSequence {
 public:
  explicit WeightSequence(std::vector<double> a);

  /// Skips the ordering/sign validation. Intended for tests that need
  /// degenerate inputs (e.g. all-equal weights).
  static WeightSequence unchecked(std::vector<double> a);

  int n() const { return static_cast<int>(a_.size()); }
  double operator[](int i) const { return a_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<double>& values() const { return a_; }
  const std::vector<double>& squares() const { return sq_; }
  double sum_squares() const { return sum_sq_; }
  double product() const { return product_; }

 private:
  struct unchecked_tag {};
  WeightSequence(std::vector<double> a, unchecked_tag);
  void finish();

  std::vector<double> a_;
  std::vector<double> sq_;
  double sum_sq_ = 0.0;
  double product_ = 1.0;
};

/// Squared increments r_i = a_i^2 - a_{i-1}^2 with a_0 = 0; the prefix sums
/// of r reproduce the squared weights.
struct Increments {
  std::vector<double> r;
  double operator[](int i) const { return r[static_cast<std::size_t>(i - 1)]; }
};

/// Minimal dense matrix, 1-indexed accessors.
struct DenseMatrix {
  int n = 0;
  std::vector<double> data;

  explicit DenseMatrix(int size)
      : n(size), data(static_cast<std::size_t>(size) * size, 0.0) {}
  double at(int i, int j) const {
    return data[static_cast<std::size_t>(i - 1) * n + (j - 1)];
  }
  double& at(int i, int j) {
    return data[static_cast<std::size_t>(i - 1) * n + (j - 1)];
  }
};

/// The weighted cyclic matrix of a class: a_{σ(i)} on the superdiagonal and
/// a_{σ(n)} in the lower-left corner, zeros elsewhere.
class CyclicMatrix {
 public:
  CyclicMatrix(WeightSequence weights, PermClass perm);

  const WeightSequence& weights() const { return weights_; }
  const PermClass& perm() const { return perm_; }
  int n() const { return weights_.n(); }

  /// b_i = a_{σ(i)}, the weights read along the cycle.
  const std::vector<double>& cycle_weights() const { return cycle_; }

  double entry(int i, int j) const;
  DenseMatrix dense() const;

 private:
  WeightSequence weights_;
  PermClass perm_;
  std::vector<double> cycle_;
};

/// Monic cubic x^3 + c2 x^2 + c1 x + c0.
struct CubicPoly {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  double eval(double x) const { return ((x + c2) * x + c1) * x + c0; }
};

Increments increments(const WeightSequence& w);

CyclicMatrix build_matrix(const WeightSequence& w, const PermClass& p);

/// The doubled real part: symmetric, zero diagonal, a_{σ(i)} on the two
/// bands adjacent to the diagonal and a_{σ(n)} in the two corners.
DenseMatrix real_part_doubled(const CyclicMatrix& m);

/// Σ_i a_{σ(i)}² a_{σ(i+1)}², cyclically (index n+1 wraps to 1). Constant on
/// classes; the Permutation overloads accept arbitrary coset members.
double adjacency_sum(const WeightSequence& w, const Permutation& p);
double adjacency_sum(const WeightSequence& w, const PermClass& p);

/// The 9-term sum over the non-cyclically-adjacent position pairs
/// (1,3),(1,4),(1,5),(2,4),(2,5),(2,6),(3,5),(3,6),(4,6) of a_{σ(i)}²a_{σ(j)}².
/// n = 6 only.
double cross_sum(const WeightSequence& w, const Permutation& p);
double cross_sum(const WeightSequence& w, const PermClass& p);

/// a_{σ(1)}²a_{σ(3)}²a_{σ(5)}² + a_{σ(2)}²a_{σ(4)}²a_{σ(6)}², the positive
/// magnitude of the permutation-dependent constant contribution. n = 6 only.
double odd_product_term(const WeightSequence& w, const Permutation& p);
double odd_product_term(const WeightSequence& w, const PermClass& p);

/// The monic cubic whose largest root is the square of the largest root of
/// the degree-6 characteristic polynomial of the doubled real part:
/// c2 = -Σ a_i², c1 = cross_sum, c0 = -odd_product_term - 2 Π a_i.
/// n = 6 only.
CubicPoly reduced_cubic(const WeightSequence& w, const Permutation& p);
CubicPoly reduced_cubic(const WeightSequence& w, const PermClass& p);

/// Scale-aware zero thresholds for coefficient differences: a linear-term
/// difference (4th power of the weight scale) or constant-term difference
/// (6th power) below these is treated as exactly zero.
double linear_coeff_zero_tolerance(const WeightSequence& w);
double const_coeff_zero_tolerance(const WeightSequence& w);

}  // namespace cyclomin
