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

#ifndef QCS_BARGMANN_HPP
#define QCS_BARGMANN_HPP

#include <functional>
#include <vector>

#include "qcs/common.hpp"
#include "qcs/measures.hpp"
#include "qcs/orthopoly.hpp"
#include "qcs/qcore.hpp"
#include "qcs/states.hpp"

namespace qcs {

/// Transform kernel
///   T(z, xi) = 1 / (z sqrt(1-q) e^{-i theta}; q)_inf
///     x 2phi1(sqrt(alpha) e^{-i theta}, -sqrt(alpha) e^{-i theta};
///             -alpha | q; z sqrt(1-q) e^{i theta}),
/// with xi = 2 cos(theta)/sqrt(1-q). The phase enters only through u^{+-2}
/// in the paired numerator product, so alpha < 0 needs no branch choice.
inline complex kernel_eval_phase(complex z, complex u, const QParams& p,
                                 SeriesControl ctrl = {}) {
  if (!(std::abs(u) > 0.0))
    throw domain_error("kernel_eval_phase: require u != 0");
  const complex t = z * std::sqrt(1.0 - p.q);
  const complex arg = t * u;
  if (!(std::abs(arg) < 1.0))
    throw domain_error("kernel_eval_phase: series argument leaves the unit disk");
  const complex series =
      detail::hyp2phi1_paired(p.alpha / (u * u), p.alpha, p.q, arg, ctrl);
  const complex pref = q_pochhammer_inf(t / u, p.q, ctrl);
  return series / pref;
}

inline complex kernel_eval(complex z, const ThetaPoint& pt, const QParams& p,
                           SeriesControl ctrl = {}) {
  if (!(pt.theta > 0.0 && pt.theta < M_PI))
    throw domain_error("kernel_eval: theta must lie in (0, pi)");
  if (!(std::abs(z) * std::sqrt(1.0 - p.q) < 1.0))
    throw domain_error("kernel_eval: z lies outside the disk");
  return kernel_eval_phase(z, std::polar(1.0, pt.theta), p, ctrl);
}

// Callable kernel bound to a parameter set.
struct TransformKernel {
  QParams params;
  SeriesControl ctrl{};

  complex operator()(complex z, const ThetaPoint& pt) const {
    return kernel_eval(z, pt, params, ctrl);
  }
};

/// Transform of a sampled function on the support interval:
///   B[f](z) = int T(z, xi) f(xi) omega(xi) d xi,
/// by quadrature. f receives the quadrature node.
template <typename F>
complex transform_fn(F&& f, complex z, const QParams& p, const Quadrature& quad,
                     SeriesControl ctrl = {}) {
  if (!(std::abs(z) < p.disk_radius))
    throw domain_error("transform_fn: z lies outside the disk");
  return quad.integrate([&](const QuadNode& node) -> complex {
    const ThetaPoint pt{node.theta, node.x};
    return kernel_eval(z, pt, p, ctrl) * f(node);
  });
}

/// Transform of a basis expansion; maps phi_n to z^n / sqrt(x_n!).
inline complex transform(const FockVector& v, complex z, const QParams& p,
                         const Quadrature& quad, SeriesControl ctrl = {}) {
  const int n_max = v.n_max();
  return transform_fn(
      [&](const QuadNode& node) -> complex {
        const PolySequence phi = basis_phi(n_max, node.x, p);
        detail::KahanSumC acc;
        for (int n = 0; n <= n_max; ++n)
          acc.add(v.coeffs[static_cast<size_t>(n)] * phi[n]);
        return acc.value();
      },
      z, p, quad, ctrl);
}

// Transform output sampled on a z grid, with the Taylor-coefficient view
// populated when the samples came from a circle extraction.
struct HolomorphicSample {
  std::vector<complex> points;
  std::vector<complex> values;
  std::vector<complex> taylor;
};

namespace detail {

// Taylor coefficients c_0..c_j_max of a holomorphic function from
// equispaced samples on the circle |z| = radius:
//   c_j = (1/(M radius^j)) sum_t F(radius e^{2 pi i t / M}) e^{-2 pi i j t / M}.
// M is a power of two; aliasing pollutes c_j only at order
// (radius sqrt(1-q))^M through the factorial decay of the true coefficients.
template <typename F>
std::vector<complex> taylor_from_circle(F&& fn, double radius, int j_max,
                                        int samples) {
  std::vector<complex> vals(static_cast<size_t>(samples));
  for (int t = 0; t < samples; ++t)
    vals[static_cast<size_t>(t)] =
        fn(std::polar(radius, 2.0 * M_PI * t / samples));
  std::vector<complex> coef(static_cast<size_t>(j_max) + 1);
  for (int j = 0; j <= j_max; ++j) {
    KahanSumC acc;
    for (int t = 0; t < samples; ++t) {
      const complex phase = std::polar(1.0, -2.0 * M_PI * j * t / samples);
      acc.add(vals[static_cast<size_t>(t)] * phase);
    }
    coef[static_cast<size_t>(j)] =
        acc.value() / (static_cast<double>(samples) * std::pow(radius, j));
  }
  return coef;
}

constexpr int kCircleSamples = 128;
constexpr double kCircleRadiusFactor = 0.8;  // of the disk radius

}  // namespace detail

/// Taylor coefficients of the transform of a basis expansion, extracted on
/// an interior circle. The largest measure atom sits on the convergence
/// boundary of the kernel series, so values there are reached per Taylor
/// mode rather than by direct kernel evaluation.
inline std::vector<complex> transform_taylor(const FockVector& v,
                                             const QParams& p,
                                             const Quadrature& quad, int j_max,
                                             SeriesControl ctrl = {}) {
  // one kernel row per circle point, shared across basis indices
  const int n_max = v.n_max();
  std::vector<std::vector<double>> phi_at(quad.nodes.size());
  for (size_t i = 0; i < quad.nodes.size(); ++i)
    phi_at[i] = basis_phi(n_max, quad.nodes[i].x, p).values;
  const double radius = detail::kCircleRadiusFactor * p.disk_radius;
  return detail::taylor_from_circle(
      [&](complex z) -> complex {
        detail::KahanSumC acc;
        for (size_t i = 0; i < quad.nodes.size(); ++i) {
          const ThetaPoint pt{quad.nodes[i].theta, quad.nodes[i].x};
          const complex kz = kernel_eval(z, pt, p, ctrl);
          detail::KahanSumC fval;
          for (int n = 0; n <= n_max; ++n)
            fval.add(v.coeffs[static_cast<size_t>(n)] * phi_at[i][static_cast<size_t>(n)]);
          acc.add(kz * fval.value() * quad.nodes[i].weight);
        }
        return acc.value();
      },
      radius, j_max, detail::kCircleSamples);
}

/// Transform of a basis expansion sampled on a z grid, with the Taylor
/// coefficient view attached; coefficient n recovers the basis component
/// scaled by 1/sqrt(x_n!).
inline HolomorphicSample sample_transform(const FockVector& v,
                                          const std::vector<complex>& points,
                                          const QParams& p,
                                          const Quadrature& quad, int j_max,
                                          SeriesControl ctrl = {}) {
  HolomorphicSample out;
  out.points = points;
  out.values.reserve(points.size());
  for (const complex& z : points)
    out.values.push_back(transform(v, z, p, quad, ctrl));
  out.taylor = transform_taylor(v, p, quad, j_max, ctrl);
  return out;
}

/// Inner product <B[phi_m], B[phi_n]> over the label disk against the
/// planar measure built from the atomic radial part. The angular integral
/// cancels all cross terms between Taylor modes identically; what remains
/// is the mode-wise sum  sum_j c_j^(m) conj(c_j^(n)) moment(j).
/// Expected delta_{mn}.
inline complex isometry_check(int m, int n, const QParams& p,
                              const DiscreteRadialMeasure& meas,
                              const Quadrature& quad, SeriesControl ctrl = {}) {
  detail::check_nonneg(m, "isometry_check");
  detail::check_nonneg(n, "isometry_check");
  const int j_max = std::max(m, n) + 8;
  const int top = std::max(m, n);
  const auto cm = transform_taylor(FockVector::basis(m, top), p, quad, j_max, ctrl);
  const auto cn = (m == n)
                      ? cm
                      : transform_taylor(FockVector::basis(n, top), p, quad,
                                         j_max, ctrl);
  detail::KahanSumC acc;
  for (int j = 0; j <= j_max; ++j)
    acc.add(cm[static_cast<size_t>(j)] * std::conj(cn[static_cast<size_t>(j)]) *
            meas.moment(j));
  return acc.value();
}

/// Full transform Gram matrix for basis indices 0..count-1 in one circle
/// sweep (each kernel row shared across all indices).
inline std::vector<std::vector<complex>> isometry_gram(
    int count, const QParams& p, const DiscreteRadialMeasure& meas,
    const Quadrature& quad, SeriesControl ctrl = {}) {
  if (count < 1) throw domain_error("isometry_gram: need count >= 1");
  const int n_max = count - 1;
  const int j_max = n_max + 8;
  const int samples = detail::kCircleSamples;
  const double radius = detail::kCircleRadiusFactor * p.disk_radius;

  std::vector<std::vector<double>> phi_at(quad.nodes.size());
  for (size_t i = 0; i < quad.nodes.size(); ++i)
    phi_at[i] = basis_phi(n_max, quad.nodes[i].x, p).values;

  // B[phi_m] on the sampling circle, all m at once
  std::vector<std::vector<complex>> bvals(
      static_cast<size_t>(count),
      std::vector<complex>(static_cast<size_t>(samples)));
  for (int t = 0; t < samples; ++t) {
    const complex z = std::polar(radius, 2.0 * M_PI * t / samples);
    std::vector<detail::KahanSumC> acc(static_cast<size_t>(count));
    for (size_t i = 0; i < quad.nodes.size(); ++i) {
      const ThetaPoint pt{quad.nodes[i].theta, quad.nodes[i].x};
      const complex kw = kernel_eval(z, pt, p, ctrl) * quad.nodes[i].weight;
      for (int mm = 0; mm < count; ++mm)
        acc[static_cast<size_t>(mm)].add(kw * phi_at[i][static_cast<size_t>(mm)]);
    }
    for (int mm = 0; mm < count; ++mm)
      bvals[static_cast<size_t>(mm)][static_cast<size_t>(t)] =
          acc[static_cast<size_t>(mm)].value();
  }

  // Taylor coefficients per m, then mode-wise radial moments
  std::vector<std::vector<complex>> coef(static_cast<size_t>(count));
  for (int mm = 0; mm < count; ++mm) {
    coef[static_cast<size_t>(mm)].resize(static_cast<size_t>(j_max) + 1);
    for (int j = 0; j <= j_max; ++j) {
      detail::KahanSumC acc;
      for (int t = 0; t < samples; ++t)
        acc.add(bvals[static_cast<size_t>(mm)][static_cast<size_t>(t)] *
                std::polar(1.0, -2.0 * M_PI * j * t / samples));
      coef[static_cast<size_t>(mm)][static_cast<size_t>(j)] =
          acc.value() / (static_cast<double>(samples) * std::pow(radius, j));
    }
  }
  std::vector<double> mom(static_cast<size_t>(j_max) + 1);
  for (int j = 0; j <= j_max; ++j) mom[static_cast<size_t>(j)] = meas.moment(j);

  std::vector<std::vector<complex>> gram(
      static_cast<size_t>(count), std::vector<complex>(static_cast<size_t>(count)));
  for (int mm = 0; mm < count; ++mm)
    for (int nn = 0; nn < count; ++nn) {
      detail::KahanSumC acc;
      for (int j = 0; j <= j_max; ++j)
        acc.add(coef[static_cast<size_t>(mm)][static_cast<size_t>(j)] *
                std::conj(coef[static_cast<size_t>(nn)][static_cast<size_t>(j)]) *
                mom[static_cast<size_t>(j)]);
      gram[static_cast<size_t>(mm)][static_cast<size_t>(nn)] = acc.value();
    }
  return gram;
}

/// Integral representation of the symmetric Al-Salam-Chihara value,
///   int conj((z sqrt(1-q))^n) T(z, xi) nu(d^2 z)
///     = (1-q)^{n/2} c_n(xi) x (radial moment n),
/// where c_n is the n-th Taylor coefficient of T(., xi). The monomial
/// factor is conjugated; as printed (unconjugated) the angular integral
/// would vanish for every n >= 1.
inline double asc_integral_representation(int n, const ThetaPoint& pt,
                                          const QParams& p,
                                          const DiscreteRadialMeasure& meas,
                                          SeriesControl ctrl = {}) {
  detail::check_nonneg(n, "asc_integral_representation");
  const double radius = detail::kCircleRadiusFactor * p.disk_radius;
  const auto coef = detail::taylor_from_circle(
      [&](complex z) { return kernel_eval(z, pt, p, ctrl); }, radius, n,
      detail::kCircleSamples);
  const complex val = std::pow(std::sqrt(1.0 - p.q), n) *
                      coef[static_cast<size_t>(n)] * meas.moment(n);
  return detail::require_real(val, "asc_integral_representation", 1e-8);
}

}  // namespace qcs

#endif  // QCS_BARGMANN_HPP
