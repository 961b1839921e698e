#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "cyclomin/cyclic_matrix.hpp"

namespace cyclomin {

enum class RadiusMethod { ClosedFormCubic, PowerIteration };

/// Numerical radius w together with t, the largest root of the reduced
/// characteristic cubic; t = 4w² always.
struct RadiusResult {
  double w = 0.0;
  double t = 0.0;
  RadiusMethod method = RadiusMethod::ClosedFormCubic;
  int iterations = 0;
  double residual = 0.0;
};

/// Minimum / maximum cyclic adjacent weight sums a_{σ(i)} + a_{σ(i+1)};
/// the largest eigenvalue of the doubled real part lies in [g, G].
struct GershBounds {
  double g = 0.0;
  double G = 0.0;
};

/// Power iteration did not reach the residual tolerance.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(double residual, int iterations);
  double last_residual;
  int iterations;
};

/// Largest real root of a monic cubic with three real roots, via the
/// trigonometric form of the depressed cubic (acos argument clamped against
/// rounding) plus a guarded Newton polish. Throws std::domain_error when the
/// cubic discriminant is decisively negative (complex roots).
double largest_cubic_root(const CubicPoly& q);

/// w = sqrt(t)/2 with t the largest root of the reduced cubic. n = 6 only.
RadiusResult radius_closed_form(const WeightSequence& w, const PermClass& p);

/// Rayleigh-quotient power iteration on the doubled real part, shifted by
/// the Gershgorin bound G so the target eigenvalue dominates in magnitude.
/// Starts from the all-ones vector; stops when the infinity-norm residual
/// of the unshifted matrix drops below tol. Any n >= 3.
RadiusResult radius_power_iteration(const WeightSequence& w, const PermClass& p,
                                    double tol = 1e-12, int max_iter = 100000);

GershBounds gersh_bounds(const WeightSequence& w, const PermClass& p);
GershBounds gersh_bounds(const WeightSequence& w, const Permutation& p);

namespace detail {

struct PowerIterationState {
  double lambda = 0.0;          // largest eigenvalue of the doubled real part
  std::vector<double> vec;      // unit eigenvector estimate
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

struct RawIterationState {
  double lambda = 0.0;
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

/// Core loop on the cycle weights b_i = a_{σ(i)} alone; the doubled real
/// part is fully determined by them.
PowerIterationState power_iterate_cycle(std::span<const double> cycle_weights,
                                        double tol, int max_iter);

/// Same loop on caller-provided workspaces (v, y of length n); v holds the
/// final eigenvector estimate. No allocation.
RawIterationState power_iterate_cycle_raw(const double* cycle_weights, int n,
                                          double tol, int max_iter, double* v,
                                          double* y);

/// Largest eigenvalue of the doubled real part via Newton descent on its
/// characteristic polynomial, started at the Gershgorin bound. The
/// polynomial has all-real roots, so the descent is monotone and converges
/// regardless of the spectral gap (power iteration stalls when the top two
/// eigenvalues nearly coincide). Batch argmin paths use this.
double cycle_lambda_max_newton(const double* cycle_weights, int n);

GershBounds gersh_bounds_cycle(std::span<const double> cycle_weights);

}  // namespace detail

}  // namespace cyclomin
