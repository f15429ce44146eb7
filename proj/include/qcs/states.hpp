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

#ifndef QCS_STATES_HPP
#define QCS_STATES_HPP

#include <utility>
#include <vector>

#include "qcs/common.hpp"
#include "qcs/measures.hpp"
#include "qcs/orthopoly.hpp"
#include "qcs/qcore.hpp"

namespace qcs {

// Finite expansion over the orthonormal basis, indices 0..n_max.
struct FockVector {
  std::vector<complex> coeffs;

  static FockVector basis(int n, int n_max) {
    detail::check_nonneg(n, "FockVector::basis");
    if (n > n_max) throw domain_error("FockVector::basis: n exceeds n_max");
    FockVector v;
    v.coeffs.assign(static_cast<size_t>(n_max) + 1, complex(0.0));
    v.coeffs[static_cast<size_t>(n)] = 1.0;
    return v;
  }

  int n_max() const { return static_cast<int>(coeffs.size()) - 1; }

  double norm() const {
    detail::KahanSum acc;
    for (const complex& c : coeffs) acc.add(std::norm(c));
    return std::sqrt(acc.value());
  }
};

/// Normalization factor N(r^2) = 2phi1(0, 0; -alpha | q; r^2 (1-q))
///                             = sum_n r^{2n} / x_n!.
inline double normalization(double r2, const QParams& p,
                            SeriesControl ctrl = {}) {
  if (!(r2 >= 0.0)) throw domain_error("normalization: require r^2 >= 0");
  if (!(r2 * (1.0 - p.q) < 1.0))
    throw domain_error("normalization: label lies outside the disk");
  const complex v = basic_hypergeometric({complex(0.0), complex(0.0)},
                                         {complex(-p.alpha)}, p.q,
                                         complex(r2 * (1.0 - p.q)), ctrl);
  return detail::require_real(v, "normalization");
}

/// Reproducing kernel K(z, w) = 2phi1(0, 0; -alpha | q; z conj(w) (1-q)).
/// Hermitian in (z, w); K(z, z) equals the normalization factor.
inline complex reproducing_kernel(complex z, complex w, const QParams& p,
                                  SeriesControl ctrl = {}) {
  const complex arg = z * std::conj(w) * (1.0 - p.q);
  if (!(std::abs(arg) < 1.0))
    throw domain_error("reproducing_kernel: |z conj(w)| (1-q) must be < 1");
  return basic_hypergeometric({complex(0.0), complex(0.0)},
                              {complex(-p.alpha)}, p.q, arg, ctrl);
}

/// Smallest truncation order whose dropped coefficient weight
/// |z|^{2n} / x_n! falls below 1e-26 N(|z|^2); the coefficient amplitude
/// past the cut is then ~1e-13 sqrt(N), which keeps pointwise series tails
/// at the 1e-12 level.
inline int default_truncation(complex z, const QParams& p) {
  const double r2 = std::norm(z);
  const double target = 1e-26 * normalization(r2, p);
  double t = 1.0;  // |z|^{2n} / x_n!
  int n = 0;
  while (t >= target && n < 100000) {
    ++n;
    t *= r2 / x_seq(n, p);
  }
  return n;
}

// Coherent state label z with its expansion coefficients
// c_n = conj(z)^n / sqrt(x_n!). The stored coefficients are the
// unnormalized ones; norm convergence towards sqrt(N) is an invariant.
struct CoherentState {
  complex z;
  QParams params;
  int n_max;
  std::vector<complex> coeffs;
};

/// Expansion coefficients of the state labeled z, truncated at n_max
/// (n_max < 0 selects the default truncation).
inline CoherentState cs_coefficients(complex z, int n_max, const QParams& p) {
  if (!(std::abs(z) < p.disk_radius))
    throw domain_error("cs_coefficients: label lies outside the disk");
  if (n_max < 0) n_max = default_truncation(z, p);
  CoherentState st{z, p, n_max, {}};
  st.coeffs.resize(static_cast<size_t>(n_max) + 1);
  complex zbar_pow = 1.0;
  double fac = 1.0;
  st.coeffs[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    zbar_pow *= std::conj(z);
    fac *= x_seq(n, p);
    st.coeffs[static_cast<size_t>(n)] = zbar_pow / std::sqrt(fac);
  }
  return st;
}

/// Wavefunction as the truncated basis series
///   N^{-1/2} sum_n conj(z)^n / sqrt(x_n!) phi_n(x).
/// tail_bound, when given, receives an estimate of the dropped remainder.
inline complex wavefunction_series(complex z, double x, const QParams& p,
                                   int n_max = -1,
                                   double* tail_bound = nullptr) {
  if (n_max < 0) n_max = default_truncation(z, p);
  const CoherentState st = cs_coefficients(z, n_max, p);
  const PolySequence phi = basis_phi(n_max, x, p);
  detail::KahanSumC acc;
  double phi_max = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    acc.add(st.coeffs[static_cast<size_t>(n)] * phi[n]);
    phi_max = std::max(phi_max, std::abs(phi[n]));
  }
  const double norm_factor = std::sqrt(normalization(std::norm(z), p));
  if (tail_bound) {
    const double c_next =
        std::abs(st.coeffs[static_cast<size_t>(n_max)]) * std::abs(z) /
        std::sqrt(x_seq(n_max + 1, p));
    const double ratio = std::abs(z) / std::sqrt(x_seq(n_max + 1, p));
    *tail_bound = (ratio < 1.0)
                      ? c_next * phi_max / (1.0 - ratio) / norm_factor
                      : std::numeric_limits<double>::infinity();
  }
  return acc.value() / norm_factor;
}

/// Closed-form wavefunction with the angular factor supplied directly as
/// u = e^{i theta} (u may be any nonzero complex number, which is what the
/// q -> 1 degeneration path needs):
///   N^{-1/2} / (conj(z) sqrt(1-q) u; q)_inf
///     x 2phi1(sqrt(alpha) u, -sqrt(alpha) u; -alpha | q; conj(z) sqrt(1-q)/u),
/// with the upper Pochhammer pair multiplied out so only alpha enters.
inline complex wavefunction_closed_phase(complex z, complex u, const QParams& p,
                                         SeriesControl ctrl = {}) {
  if (!(std::abs(z) < p.disk_radius))
    throw domain_error("wavefunction_closed_phase: label lies outside the disk");
  if (!(std::abs(u) > 0.0))
    throw domain_error("wavefunction_closed_phase: require u != 0");
  const complex t = std::conj(z) * std::sqrt(1.0 - p.q);
  const complex arg = t / u;
  if (!(std::abs(arg) < 1.0))
    throw domain_error("wavefunction_closed_phase: series argument leaves the unit disk");
  const complex series =
      detail::hyp2phi1_paired(p.alpha * u * u, p.alpha, p.q, arg, ctrl);
  const complex pref = q_pochhammer_inf(t * u, p.q, ctrl);
  const double nf = normalization(std::norm(z), p, ctrl);
  return series / (pref * std::sqrt(nf));
}

/// Closed-form wavefunction at a point of the support interval.
inline complex wavefunction_closed(complex z, const ThetaPoint& pt,
                                   const QParams& p, SeriesControl ctrl = {}) {
  if (!(pt.theta > 0.0 && pt.theta < M_PI))
    throw domain_error("wavefunction_closed: theta must lie in (0, pi)");
  return wavefunction_closed_phase(z, std::polar(1.0, pt.theta), p, ctrl);
}

enum class LadderOp { lower, raise };

/// Ladder action a phi_n = sqrt(2 x_n) phi_{n-1},
/// a* phi_n = sqrt(2 x_{n+1}) phi_{n+1} on a truncated expansion. Raising
/// pushes the top coefficient past the truncation; its amplitude is
/// reported through dropped when requested.
inline FockVector ladder_apply(const FockVector& v, LadderOp which,
                               const QParams& p, double* dropped = nullptr) {
  const int n_max = v.n_max();
  if (n_max < 1) throw domain_error("ladder_apply: need n_max >= 1");
  FockVector out;
  out.coeffs.assign(static_cast<size_t>(n_max) + 1, complex(0.0));
  if (dropped) *dropped = 0.0;
  if (which == LadderOp::lower) {
    for (int n = 0; n < n_max; ++n)
      out.coeffs[static_cast<size_t>(n)] =
          v.coeffs[static_cast<size_t>(n) + 1] *
          std::sqrt(2.0 * x_seq(n + 1, p));
  } else {
    for (int n = 1; n <= n_max; ++n)
      out.coeffs[static_cast<size_t>(n)] =
          v.coeffs[static_cast<size_t>(n) - 1] * std::sqrt(2.0 * x_seq(n, p));
    if (dropped)
      *dropped = std::abs(v.coeffs[static_cast<size_t>(n_max)]) *
                 std::sqrt(2.0 * x_seq(n_max + 1, p));
  }
  return out;
}

/// Position action Q phi_n = sqrt(x_n) phi_{n-1} + sqrt(x_{n+1}) phi_{n+1};
/// the sqrt(2) ladder convention cancels against the 1/sqrt(2) in Q.
inline FockVector position_apply(const FockVector& v, const QParams& p,
                                 double* dropped = nullptr) {
  const int n_max = v.n_max();
  if (n_max < 1) throw domain_error("position_apply: need n_max >= 1");
  FockVector out;
  out.coeffs.assign(static_cast<size_t>(n_max) + 1, complex(0.0));
  for (int n = 0; n <= n_max; ++n) {
    complex c = 0.0;
    if (n + 1 <= n_max)
      c += v.coeffs[static_cast<size_t>(n) + 1] * std::sqrt(x_seq(n + 1, p));
    if (n >= 1)
      c += v.coeffs[static_cast<size_t>(n) - 1] * std::sqrt(x_seq(n, p));
    out.coeffs[static_cast<size_t>(n)] = c;
  }
  if (dropped)
    *dropped = std::abs(v.coeffs[static_cast<size_t>(n_max)]) *
               std::sqrt(x_seq(n_max + 1, p));
  return out;
}

namespace detail {

// Number of eigenvalues of the truncated position matrix (symmetric
// tridiagonal, zero diagonal, off-diagonal beta_n = sqrt(x_{n+1})) that lie
// below sigma, by Sturm sequence count.
inline int sturm_count_below(int N, const QParams& p, double sigma) {
  int count = 0;
  double d = -sigma;
  if (d < 0.0) ++count;
  for (int i = 1; i < N; ++i) {
    const double beta2 = x_seq(i, p);
    if (d == 0.0) d = -1e-300;
    d = -sigma - beta2 / d;
    if (d < 0.0) ++count;
  }
  return count;
}

}  // namespace detail

/// Extreme eigenvalues of the N x N truncated position matrix, bracketed by
/// Sturm-count bisection. The spectrum is symmetric about zero since the
/// diagonal vanishes.
inline std::pair<double, double> position_spectrum_bounds(int N,
                                                          const QParams& p) {
  if (N < 1) throw domain_error("position_spectrum_bounds: need N >= 1");
  // Gershgorin bound
  double hi = 0.0;
  for (int i = 0; i < N; ++i) {
    double row = 0.0;
    if (i >= 1) row += std::sqrt(x_seq(i, p));
    if (i + 1 < N) row += std::sqrt(x_seq(i + 1, p));
    hi = std::max(hi, row);
  }
  hi += 1.0;
  double lo = 0.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (detail::sturm_count_below(N, p, mid) == N)
      hi = mid;
    else
      lo = mid;
    if (hi - lo < 1e-13 * std::max(1.0, hi)) break;
  }
  const double lambda_max = 0.5 * (lo + hi);
  return {-lambda_max, lambda_max};
}

/// Matrix element of the resolution-of-identity operator between basis
/// states n and m. The angular integral is a Kronecker delta, taken
/// analytically; only the radial moment is numerical, so off-diagonal
/// entries are exactly zero and diagonal entries are moment(n)/x_n!.
inline double identity_resolution_check(int n, int m, const QParams& p,
                                        double tol) {
  detail::check_nonneg(n, "identity_resolution_check");
  detail::check_nonneg(m, "identity_resolution_check");
  if (n != m) return 0.0;
  const double scale = std::min(1.0, x_factorial(n, p));
  const DiscreteRadialMeasure meas =
      radial_measure(p, 0.01 * tol * scale, std::max(n, 20));
  return radial_moment(meas, n) / x_factorial(n, p);
}

}  // namespace qcs

#endif  // QCS_STATES_HPP
