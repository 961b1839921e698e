#include "cyclomin/cyclic_matrix.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace cyclomin {

namespace {

constexpr std::array<std::pair<int, int>, 9> kCrossPairs = {{
    {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 6},
}};

void require_match(const WeightSequence& w, int perm_n) {
  if (w.n() != perm_n) {
    throw std::domain_error("weight sequence and permutation have different n (" +
                            std::to_string(w.n()) + " vs " +
                            std::to_string(perm_n) + ")");
  }
}

void require_six(const WeightSequence& w, const std::vector<int>& img,
                 const char* what) {
  require_match(w, static_cast<int>(img.size()));
  if (w.n() != 6) {
    throw std::domain_error(std::string(what) + " is defined for n = 6 only");
  }
}

// The unordered value pairs hit by these sums are invariant under the
// dihedral action on positions. Accumulating in value-pair order makes the
// results bit-identical across all members of a class, not just equal up to
// rounding.
double keyed_pair_sum(const WeightSequence& w, const int* left_pos,
                      const int* right_pos, int count,
                      const std::vector<int>& img) {
  const auto& sq = w.squares();
  int keys[16];
  double values[16];
  for (int k = 0; k < count; ++k) {
    int v = img[static_cast<std::size_t>(left_pos[k] - 1)];
    int u = img[static_cast<std::size_t>(right_pos[k] - 1)];
    if (v > u) std::swap(v, u);
    keys[k] = v * 16 + u;
    values[k] = sq[static_cast<std::size_t>(v - 1)] *
                sq[static_cast<std::size_t>(u - 1)];
  }
  for (int k = 1; k < count; ++k) {  // insertion sort by value-pair key
    const int key = keys[k];
    const double value = values[k];
    int j = k - 1;
    while (j >= 0 && keys[j] > key) {
      keys[j + 1] = keys[j];
      values[j + 1] = values[j];
      --j;
    }
    keys[j + 1] = key;
    values[j + 1] = value;
  }
  double sum = 0.0;
  for (int k = 0; k < count; ++k) sum += values[k];
  return sum;
}

double cross_sum_images(const WeightSequence& w, const std::vector<int>& img) {
  int left[9];
  int right[9];
  for (int k = 0; k < 9; ++k) {
    left[k] = kCrossPairs[static_cast<std::size_t>(k)].first;
    right[k] = kCrossPairs[static_cast<std::size_t>(k)].second;
  }
  return keyed_pair_sum(w, left, right, 9, img);
}

double adjacency_sum_images(const WeightSequence& w, const std::vector<int>& img) {
  const int n = static_cast<int>(img.size());
  int left[16];
  int right[16];
  for (int i = 0; i < n; ++i) {
    left[i] = i + 1;
    right[i] = (i + 1) % n + 1;
  }
  return keyed_pair_sum(w, left, right, n, img);
}

double odd_product_images(const WeightSequence& w, const std::vector<int>& img) {
  const auto& sq = w.squares();
  // Multiply each triple in ascending value order; the two triples are the
  // family set and its complement, so both products are class-invariant.
  auto triple = [&](int a, int b, int c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return sq[static_cast<std::size_t>(a - 1)] *
           sq[static_cast<std::size_t>(b - 1)] *
           sq[static_cast<std::size_t>(c - 1)];
  };
  return triple(img[0], img[2], img[4]) + triple(img[1], img[3], img[5]);
}

}  // namespace

WeightSequence::WeightSequence(std::vector<double> a) : a_(std::move(a)) {
  if (a_.size() < 3) {
    throw std::invalid_argument("weight sequence needs at least 3 entries");
  }
  for (double x : a_) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("weights must be finite");
    }
  }
  if (a_.front() < 0.0) {
    throw WeightSignError("weights must be nonnegative, got " +
                          std::to_string(a_.front()));
  }
  for (std::size_t i = 1; i < a_.size(); ++i) {
    if (!(a_[i - 1] < a_[i])) {
      throw WeightOrderError("weights must be strictly increasing at index " +
                             std::to_string(i + 1));
    }
  }
  finish();
}

WeightSequence::WeightSequence(std::vector<double> a, unchecked_tag)
    : a_(std::move(a)) {
  if (a_.size() < 3) {
    throw std::invalid_argument("weight sequence needs at least 3 entries");
  }
  finish();
}

WeightSequence WeightSequence::unchecked(std::vector<double> a) {
  return WeightSequence(std::move(a), unchecked_tag{});
}

void WeightSequence::finish() {
  sq_.resize(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) {
    sq_[i] = a_[i] * a_[i];
    sum_sq_ += sq_[i];
    product_ *= a_[i];
  }
}

Increments increments(const WeightSequence& w) {
  Increments inc;
  inc.r.resize(static_cast<std::size_t>(w.n()));
  double prev = 0.0;
  for (int i = 1; i <= w.n(); ++i) {
    const double sq = w.squares()[static_cast<std::size_t>(i - 1)];
    inc.r[static_cast<std::size_t>(i - 1)] = sq - prev;
    prev = sq;
  }
  return inc;
}

CyclicMatrix::CyclicMatrix(WeightSequence weights, PermClass perm)
    : weights_(std::move(weights)), perm_(std::move(perm)) {
  require_match(weights_, perm_.n());
  cycle_.resize(static_cast<std::size_t>(n()));
  for (int i = 1; i <= n(); ++i) {
    cycle_[static_cast<std::size_t>(i - 1)] = weights_[perm_.rep()(i)];
  }
}

double CyclicMatrix::entry(int i, int j) const {
  if (j == i + 1) return cycle_[static_cast<std::size_t>(i - 1)];
  if (i == n() && j == 1) return cycle_.back();
  return 0.0;
}

DenseMatrix CyclicMatrix::dense() const {
  DenseMatrix m(n());
  for (int i = 1; i < n(); ++i) m.at(i, i + 1) = cycle_[static_cast<std::size_t>(i - 1)];
  m.at(n(), 1) = cycle_.back();
  return m;
}

CyclicMatrix build_matrix(const WeightSequence& w, const PermClass& p) {
  return CyclicMatrix(w, p);
}

DenseMatrix real_part_doubled(const CyclicMatrix& m) {
  DenseMatrix out(m.n());
  const auto& b = m.cycle_weights();
  for (int i = 1; i < m.n(); ++i) {
    out.at(i, i + 1) = b[static_cast<std::size_t>(i - 1)];
    out.at(i + 1, i) = b[static_cast<std::size_t>(i - 1)];
  }
  out.at(m.n(), 1) = b.back();
  out.at(1, m.n()) = b.back();
  return out;
}

double adjacency_sum(const WeightSequence& w, const Permutation& p) {
  require_match(w, p.n());
  return adjacency_sum_images(w, p.images());
}

double adjacency_sum(const WeightSequence& w, const PermClass& p) {
  return adjacency_sum(w, p.rep());
}

double cross_sum(const WeightSequence& w, const Permutation& p) {
  require_six(w, p.images(), "cross_sum");
  return cross_sum_images(w, p.images());
}

double cross_sum(const WeightSequence& w, const PermClass& p) {
  return cross_sum(w, p.rep());
}

double odd_product_term(const WeightSequence& w, const Permutation& p) {
  require_six(w, p.images(), "odd_product_term");
  return odd_product_images(w, p.images());
}

double odd_product_term(const WeightSequence& w, const PermClass& p) {
  return odd_product_term(w, p.rep());
}

CubicPoly reduced_cubic(const WeightSequence& w, const Permutation& p) {
  require_six(w, p.images(), "reduced_cubic");
  CubicPoly q;
  q.c2 = -w.sum_squares();
  q.c1 = cross_sum_images(w, p.images());
  // Constant term of the even characteristic polynomial: the two alternating
  // perfect matchings of the cycle plus the cycle term. The cycle term enters
  // with a minus sign (check against the unit-weight cycle, whose doubled
  // real part has determinant -4 = -1 - 1 - 2).
  q.c0 = -odd_product_images(w, p.images()) - 2.0 * w.product();
  return q;
}

CubicPoly reduced_cubic(const WeightSequence& w, const PermClass& p) {
  return reduced_cubic(w, p.rep());
}

double linear_coeff_zero_tolerance(const WeightSequence& w) {
  const double s = w.sum_squares();
  return 1e-12 * s * s;
}

double const_coeff_zero_tolerance(const WeightSequence& w) {
  const double s = w.sum_squares();
  return 1e-12 * s * s * s;
}

}  // namespace cyclomin
