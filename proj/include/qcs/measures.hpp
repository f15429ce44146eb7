// Copyright 2026 The qcs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCS_MEASURES_HPP
#define QCS_MEASURES_HPP

#include <type_traits>
#include <utility>
#include <vector>

#include "qcs/common.hpp"
#include "qcs/orthopoly.hpp"
#include "qcs/qcore.hpp"

namespace qcs {

struct RadialAtom {
  double radius;
  double weight;
};

// Atomic radial measure with atoms at r_k = (1-q)^{-1/2} q^{k/2}. Its even
// moments reproduce the generalized factorials: integral of r^{2n} equals
// x_n!. Immutable after construction.
struct DiscreteRadialMeasure {
  std::vector<RadialAtom> atoms;
  QParams params;
  double tail_bound;  // bound on the total mass beyond the last atom

  double moment(int n) const {
    detail::KahanSum acc;
    for (const RadialAtom& a : atoms)
      acc.add(a.weight * std::pow(a.radius, 2 * n));
    return acc.value();
  }

  // Bound on the moment tail dropped by truncation; the atom radii decrease,
  // so the last retained radius controls every higher power.
  double moment_tail(int n) const {
    if (atoms.empty()) return tail_bound;
    const double r = atoms.back().radius;
    return tail_bound * std::pow(std::max(1.0, r), 2 * n);
  }
};

/// Builds the radial measure with weights
///   w_k = (-alpha, q; q)_inf q^k h_k(-alpha/q | q) / (q; q)_k,
/// keeping atoms until the geometric tail estimate drops below tol and the
/// moments up to n_max_moment are unaffected at the same level.
inline DiscreteRadialMeasure radial_measure(const QParams& p, double tol,
                                            int n_max_moment = 20,
                                            SeriesControl ctrl = {}) {
  if (!(tol > 0.0)) throw domain_error("radial_measure: tol must be > 0");
  const double q = p.q;
  const double alpha = p.alpha;
  const double C =
      q_pochhammer_inf(-alpha, q, ctrl) * q_pochhammer_inf(q, q, ctrl);
  const double z = -alpha / q;
  // envelope ratio for w_k: h_k grows at most like max(1, |z|)^k
  const double ratio = std::min(0.999, std::max(q, std::abs(alpha)));

  DiscreteRadialMeasure m{{}, p, 0.0};
  double qk = 1.0;      // q^k
  double poch_q = 1.0;  // (q; q)_k
  double h_prev = 1.0, h_cur = 1.0 + z;
  int small_run = 0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    const double h_k = (k == 0) ? 1.0 : h_cur;
    const double w = C * qk * h_k / poch_q;
    if (w < -tol) throw positivity_error("radial_measure: negative atom weight");
    const double r = p.disk_radius * std::pow(q, 0.5 * k);
    m.atoms.push_back({r, std::max(w, 0.0)});

    // the weights are enveloped by C (k+1) ratio^k; ask for a few
    // consecutive hits so a transient dip of w_k cannot end the scan early
    const double tail = 2.0 * std::abs(w) * ratio / (1.0 - ratio);
    if (k >= 8 && tail < tol &&
        tail * std::pow(std::max(1.0, r), 2 * n_max_moment) < tol) {
      if (++small_run >= 3) {
        m.tail_bound = std::max(tail, 1e-300);
        return m;
      }
    } else {
      small_run = 0;
    }

    // advance k -> k+1
    qk *= q;
    poch_q *= (1.0 - qk);
    if (k >= 1) {
      const double h_next =
          (1.0 + z) * h_cur - (1.0 - std::pow(q, k)) * z * h_prev;
      h_prev = h_cur;
      h_cur = h_next;
    }
  }
  throw convergence_error("radial_measure: atom cap reached");
}

/// Even moment sum_k w_k r_k^{2n} of an already-built measure. When
/// tail_estimate is supplied it receives the truncation bound at this order.
inline double radial_moment(const DiscreteRadialMeasure& m, int n,
                            double* tail_estimate = nullptr) {
  detail::check_nonneg(n, "radial_moment");
  if (tail_estimate) *tail_estimate = m.moment_tail(n);
  return m.moment(n);
}

/// g(x, gamma; q) = prod_k (1 - gamma x sqrt(1-q) q^k + gamma^2 q^{2k}).
inline double g_product(double x, double gamma, double q,
                        SeriesControl ctrl = {}) {
  detail::check_q(q);
  ctrl.validate();
  const double s = x * std::sqrt(1.0 - q);
  double prod = 1.0;
  double qk = 1.0;
  int small_run = 0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    const double move = std::abs(gamma * s * qk) + gamma * gamma * qk * qk;
    if (move / (1.0 - q) < ctrl.rel_tol) {
      if (++small_run >= ctrl.consecutive_small) return prod;
    } else {
      small_run = 0;
    }
    prod *= (1.0 - gamma * s * qk + gamma * gamma * qk * qk);
    qk *= q;
  }
  throw convergence_error("g_product: term cap reached");
}

/// Complex-parameter variant of g_product (used by cross-route checks).
inline complex g_product(double x, complex gamma, double q,
                         SeriesControl ctrl = {}) {
  detail::check_q(q);
  ctrl.validate();
  const double s = x * std::sqrt(1.0 - q);
  complex prod = 1.0;
  double qk = 1.0;
  int small_run = 0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    const double move = std::abs(gamma * s * qk) + std::norm(gamma) * qk * qk;
    if (move / (1.0 - q) < ctrl.rel_tol) {
      if (++small_run >= ctrl.consecutive_small) return prod;
    } else {
      small_run = 0;
    }
    prod *= (1.0 - gamma * s * qk + gamma * gamma * qk * qk);
    qk *= q;
  }
  throw convergence_error("g_product: term cap reached");
}

/// The pair g(x, sqrt(alpha); q) g(x, -sqrt(alpha); q) with the conjugate
/// factors multiplied out first, so only alpha enters and the arithmetic
/// stays real for alpha < 0:
///   prod_k [(1 + alpha q^{2k})^2 - alpha x^2 (1-q) q^{2k}].
inline double g_product_pair(double x, double alpha, double q,
                             SeriesControl ctrl = {}) {
  detail::check_q(q);
  ctrl.validate();
  const double s2 = x * x * (1.0 - q);
  double prod = 1.0;
  double q2k = 1.0;  // q^{2k}
  const double q2 = q * q;
  int small_run = 0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    const double move =
        (2.0 * std::abs(alpha) + alpha * alpha + std::abs(alpha) * s2) * q2k;
    if (move / (1.0 - q2) < ctrl.rel_tol) {
      if (++small_run >= ctrl.consecutive_small) return prod;
    } else {
      small_run = 0;
    }
    const double onepa = 1.0 + alpha * q2k;
    prod *= onepa * onepa - alpha * s2 * q2k;
    q2k *= q2;
  }
  throw convergence_error("g_product_pair: term cap reached");
}

/// Orthogonality weight on the support interval,
///   omega(x) = (q, -alpha; q)_inf / (2 pi) sqrt((1-q)/(4 - (1-q) x^2))
///              g(x,1) g(x,-1) g(x,sqrt(q)) g(x,-sqrt(q))
///              / (g(x,sqrt(alpha)) g(x,-sqrt(alpha))),
/// evaluated in the theta parametrization: the square-root factor is
/// sqrt(1-q) / (2 sin theta), which stays exact at the interval ends.
/// Returns 0 at the exact endpoints.
inline double weight_omega(const ThetaPoint& pt, const QParams& p,
                           SeriesControl ctrl = {}) {
  const double sin_theta = std::sin(pt.theta);
  if (sin_theta == 0.0) return 0.0;
  const double q = p.q;
  const double pref = q_pochhammer_inf(q, q, ctrl) *
                      q_pochhammer_inf(-p.alpha, q, ctrl) / (2.0 * M_PI);
  const double num = g_product(pt.x, 1.0, q, ctrl) *
                     g_product(pt.x, -1.0, q, ctrl) *
                     g_product(pt.x, std::sqrt(q), q, ctrl) *
                     g_product(pt.x, -std::sqrt(q), q, ctrl);
  const double den = g_product_pair(pt.x, p.alpha, q, ctrl);
  return pref * std::sqrt(1.0 - q) / (2.0 * sin_theta) * num / den;
}

inline double weight_omega(double x, const QParams& p, SeriesControl ctrl = {}) {
  if (std::abs(x) > p.interval_halfwidth * (1.0 + 1e-12))
    throw domain_error("weight_omega: x outside the support interval");
  if (std::abs(x) >= p.interval_halfwidth) return 0.0;
  return weight_omega(ThetaPoint::from_x(x, p), p, ctrl);
}

/// alpha = 0 weight (the q-Gaussian case):
///   omega(x(theta)) = (q; q)_inf sqrt(1-q)/pi sin(theta)
///                     prod_{n>=1} |1 - q^n e^{2 i theta}|^2.
/// The product starts at n = 1; the n = 0 factor belongs to the
/// 4 sin^2(theta) already split off into the sine and the constants.
inline double weight_omega_qgauss(double theta, double q,
                                  SeriesControl ctrl = {}) {
  detail::check_q(q);
  ctrl.validate();
  if (!(theta >= 0.0 && theta <= M_PI))
    throw domain_error("weight_omega_qgauss: theta must lie in [0, pi]");
  const double sin_theta = std::sin(theta);
  if (sin_theta == 0.0) return 0.0;
  const double cos2t = std::cos(2.0 * theta);
  double prod = 1.0;
  double qn = q;
  int small_run = 0;
  int n = 1;
  for (; n < ctrl.max_terms; ++n) {
    const double move = 2.0 * qn + qn * qn;
    if (move / (1.0 - q) < ctrl.rel_tol) {
      if (++small_run >= ctrl.consecutive_small) break;
    } else {
      small_run = 0;
    }
    prod *= 1.0 - 2.0 * qn * cos2t + qn * qn;  // |1 - q^n e^{2 i theta}|^2
    qn *= q;
  }
  if (n >= ctrl.max_terms)
    throw convergence_error("weight_omega_qgauss: term cap reached");
  return q_pochhammer_inf(q, q, ctrl) * std::sqrt(1.0 - q) / M_PI * sin_theta *
         prod;
}

// Callable weight bound to a parameter set.
struct WeightFunction {
  QParams params;
  SeriesControl ctrl{};

  double operator()(const ThetaPoint& pt) const {
    return weight_omega(pt, params, ctrl);
  }
  double operator()(double x) const { return weight_omega(x, params, ctrl); }
};

struct QuadNode {
  double theta;
  double x;
  double weight;  // Gauss-Legendre weight x omega(x) x |dx/dtheta|
};

// Quadrature rule approximating integrals of f against the orthogonality
// weight: integrate(f) ~ int f(x) omega(x) dx over the support interval.
struct Quadrature {
  QParams params;
  int order;
  std::vector<QuadNode> nodes;

  template <typename F>
  auto integrate(F&& f) const {
    using R = std::decay_t<decltype(f(nodes[0]))>;
    if constexpr (std::is_same_v<R, complex>) {
      detail::KahanSumC acc;
      for (const QuadNode& n : nodes) acc.add(f(n) * n.weight);
      return acc.value();
    } else {
      detail::KahanSum acc;
      for (const QuadNode& n : nodes) acc.add(f(n) * n.weight);
      return acc.value();
    }
  }
};

namespace detail {

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
inline std::vector<std::pair<double, double>> gauss_legendre(int n) {
  std::vector<std::pair<double, double>> out(static_cast<size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    out[static_cast<size_t>(i)] = {-x, w};
    out[static_cast<size_t>(n - 1 - i)] = {x, w};
  }
  return out;
}

}  // namespace detail

/// Gauss-Legendre rule on theta in [0, pi] composed with x(theta) and the
/// Jacobian |dx/dtheta| = 2 sin(theta)/sqrt(1-q), folding the weight omega
/// into the node weights.
inline Quadrature make_quadrature(const QParams& p, int order,
                                  SeriesControl ctrl = {}) {
  if (order < 2) throw domain_error("make_quadrature: order must be >= 2");
  Quadrature quad{p, order, {}};
  quad.nodes.reserve(static_cast<size_t>(order));
  const double jac_scale = 2.0 / std::sqrt(1.0 - p.q);
  for (const auto& [u, w] : detail::gauss_legendre(order)) {
    const double theta = 0.5 * M_PI * (u + 1.0);
    const ThetaPoint pt = ThetaPoint::from_theta(theta, p);
    const double omega = weight_omega(pt, p, ctrl);
    const double weight =
        w * (0.5 * M_PI) * omega * jac_scale * std::sin(theta);
    quad.nodes.push_back({theta, pt.x, weight});
  }
  return quad;
}

}  // namespace qcs

#endif  // QCS_MEASURES_HPP
