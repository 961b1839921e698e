#include "cyclomin/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cyclomin {

ConvergenceError::ConvergenceError(double residual, int iterations)
    : std::runtime_error("power iteration did not converge after " +
                         std::to_string(iterations) +
                         " iterations (last residual " +
                         std::to_string(residual) + ")"),
      last_residual(residual),
      iterations(iterations) {}

double largest_cubic_root(const CubicPoly& q) {
  const double b = q.c2;
  const double shift = b / 3.0;
  const double p = q.c1 - b * b / 3.0;
  const double qq = (2.0 * b * b * b) / 27.0 - (b * q.c1) / 3.0 + q.c0;
  const double scale = std::max(1.0, std::abs(b));

  double root;
  if (p >= -1e-14 * scale * scale) {
    // No two distinct critical points: only a triple (or near-triple) root
    // is admissible.
    if (p <= 1e-10 * scale * scale &&
        std::abs(qq) <= 1e-10 * scale * scale * scale) {
      return -shift;
    }
    throw std::domain_error("cubic has complex roots (nonnegative depressed p)");
  } else {
    const double m = 2.0 * std::sqrt(-p / 3.0);
    double arg = 3.0 * qq / (p * m);  // cos of the tripled phase
    if (arg > 1.0 + 1e-8 || arg < -1.0 - 1e-8) {
      throw std::domain_error("cubic has complex roots (discriminant < 0)");
    }
    arg = std::clamp(arg, -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    root = m * std::cos(phi) - shift;
  }

  // Newton polish, kept only while it improves the residual.
  for (int k = 0; k < 3; ++k) {
    const double f = q.eval(root);
    const double fp = (3.0 * root + 2.0 * b) * root + q.c1;
    if (fp == 0.0) break;
    const double candidate = root - f / fp;
    if (std::abs(q.eval(candidate)) < std::abs(f)) {
      root = candidate;
    } else {
      break;
    }
  }
  return root;
}

RadiusResult radius_closed_form(const WeightSequence& w, const PermClass& p) {
  const CubicPoly q = reduced_cubic(w, p);
  const double t = largest_cubic_root(q);
  RadiusResult r;
  r.t = t;
  r.w = 0.5 * std::sqrt(std::max(t, 0.0));
  r.method = RadiusMethod::ClosedFormCubic;
  r.iterations = 0;
  r.residual = std::abs(q.eval(t));
  return r;
}

namespace detail {

GershBounds gersh_bounds_cycle(std::span<const double> b) {
  const std::size_t n = b.size();
  GershBounds out;
  out.g = b[n - 1] + b[0];
  out.G = out.g;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double s = b[i] + b[i + 1];
    out.g = std::min(out.g, s);
    out.G = std::max(out.G, s);
  }
  return out;
}

RawIterationState power_iterate_cycle_raw(const double* b, int n, double tol,
                                          int max_iter, double* v, double* y) {
  if (tol <= 0.0) throw std::domain_error("power iteration tol must be positive");
  const double shift =
      gersh_bounds_cycle(std::span<const double>(b, static_cast<std::size_t>(n)))
          .G;

  const double start = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) v[i] = start;

  RawIterationState st;
  for (int iter = 1; iter <= max_iter; ++iter) {
    double lambda = 0.0;
    for (int i = 0; i < n; ++i) {
      const int prev = (i == 0) ? n - 1 : i - 1;
      const int next = (i + 1 == n) ? 0 : i + 1;
      y[i] = b[prev] * v[prev] + b[i] * v[next];
      lambda += v[i] * y[i];
    }
    double resid = 0.0;
    for (int i = 0; i < n; ++i) {
      resid = std::max(resid, std::abs(y[i] - lambda * v[i]));
    }
    st.lambda = lambda;
    st.iterations = iter;
    st.residual = resid;
    if (resid <= tol) {
      st.converged = true;
      return st;
    }
    double norm_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] += shift * v[i];
      norm_sq += y[i] * y[i];
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (int i = 0; i < n; ++i) v[i] = y[i] * inv;
  }
  return st;  // converged stays false
}

namespace {

// Characteristic polynomial of the doubled real part and its derivative at
// x, via the three-term chain recurrence: the open chain on all n sites,
// minus the corner weight squared times the interior chain, minus twice the
// cycle product.
void cycle_charpoly(const double* b, int n, double x, double& value,
                    double& derivative) {
  auto chain = [x](const double* couplings, int sites, double& f, double& fp) {
    double f0 = 1.0, fp0 = 0.0;       // empty chain
    double f1 = x, fp1 = 1.0;         // single site
    for (int k = 2; k <= sites; ++k) {
      const double c2 = couplings[k - 2] * couplings[k - 2];
      const double f2 = x * f1 - c2 * f0;
      const double fp2 = f1 + x * fp1 - c2 * fp0;
      f0 = f1; fp0 = fp1;
      f1 = f2; fp1 = fp2;
    }
    f = (sites == 0) ? 1.0 : f1;
    fp = (sites == 0) ? 0.0 : fp1;
  };
  double full, full_p, inner, inner_p;
  chain(b, n, full, full_p);
  chain(b + 1, n - 2, inner, inner_p);
  double cycle_term = 2.0;
  for (int i = 0; i < n; ++i) cycle_term *= b[i];
  const double corner2 = b[n - 1] * b[n - 1];
  value = full - corner2 * inner - cycle_term;
  derivative = full_p - corner2 * inner_p;
}

}  // namespace

double cycle_lambda_max_newton(const double* b, int n) {
  double x = gersh_bounds_cycle(std::span<const double>(b, static_cast<std::size_t>(n))).G;
  for (int iter = 0; iter < 500; ++iter) {
    double f, fp;
    cycle_charpoly(b, n, x, f, fp);
    if (fp <= 0.0) break;  // at or below the largest root already
    const double next = x - f / fp;
    if (!(next < x)) break;  // no downward progress left
    const double step = x - next;
    x = next;
    if (step <= 1e-15 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

PowerIterationState power_iterate_cycle(std::span<const double> b, double tol,
                                        int max_iter) {
  const int n = static_cast<int>(b.size());
  PowerIterationState st;
  st.vec.resize(b.size());
  std::vector<double> y(b.size());
  const RawIterationState raw =
      power_iterate_cycle_raw(b.data(), n, tol, max_iter, st.vec.data(), y.data());
  st.lambda = raw.lambda;
  st.iterations = raw.iterations;
  st.residual = raw.residual;
  st.converged = raw.converged;
  return st;
}

}  // namespace detail

RadiusResult radius_power_iteration(const WeightSequence& w, const PermClass& p,
                                    double tol, int max_iter) {
  const CyclicMatrix m = build_matrix(w, p);
  const auto st = detail::power_iterate_cycle(m.cycle_weights(), tol, max_iter);
  if (!st.converged) throw ConvergenceError(st.residual, st.iterations);
  RadiusResult r;
  r.w = 0.5 * st.lambda;
  r.t = st.lambda * st.lambda;
  r.method = RadiusMethod::PowerIteration;
  r.iterations = st.iterations;
  r.residual = st.residual;
  return r;
}

GershBounds gersh_bounds(const WeightSequence& w, const Permutation& p) {
  if (w.n() != p.n()) {
    throw std::domain_error("weight sequence and permutation have different n");
  }
  std::vector<double> b(static_cast<std::size_t>(w.n()));
  for (int i = 1; i <= w.n(); ++i) {
    b[static_cast<std::size_t>(i - 1)] = w[p(i)];
  }
  return detail::gersh_bounds_cycle(b);
}

GershBounds gersh_bounds(const WeightSequence& w, const PermClass& p) {
  return gersh_bounds(w, p.rep());
}

}  // namespace cyclomin
