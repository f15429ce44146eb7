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

#ifndef QCS_LIMITS_HPP
#define QCS_LIMITS_HPP

#include <span>
#include <vector>

#include "qcs/common.hpp"
#include "qcs/measures.hpp"
#include "qcs/orthopoly.hpp"
#include "qcs/qcore.hpp"
#include "qcs/states.hpp"

namespace qcs {

/// Gamma function by the Lanczos approximation (g = 7, 9 terms), accurate
/// to better than 1e-12 relative on (0, 30).
inline double gamma_fn(double x) {
  static const double coef[9] = {
      0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
      771.32342877765313,       -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};
  if (!(x > 0.0)) throw domain_error("gamma_fn: require x > 0");
  if (x < 0.5) {
    // reflection
    return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
  }
  const double xm = x - 1.0;
  double a = coef[0];
  const double t = xm + 7.5;
  for (int i = 1; i < 9; ++i) a += coef[i] / (xm + i);
  return std::sqrt(2.0 * M_PI) * std::pow(t, xm + 0.5) * std::exp(-t) * a;
}

/// Modified Bessel function I_sigma(x) by the ascending series, sigma > -1,
/// x >= 0. All terms are positive.
inline double bessel_i(double sigma, double x, SeriesControl ctrl = {}) {
  ctrl.validate();
  if (!(x >= 0.0)) throw domain_error("bessel_i: require x >= 0");
  if (!(sigma > -1.0)) throw domain_error("bessel_i: require sigma > -1");
  if (x == 0.0) {
    if (sigma > 0.0) return 0.0;
    if (sigma == 0.0) return 1.0;
    throw domain_error("bessel_i: singular at x = 0 for sigma < 0");
  }
  const double h = 0.5 * x;
  double term = std::exp(sigma * std::log(h)) / gamma_fn(sigma + 1.0);
  detail::KahanSum acc;
  acc.add(term);
  const double h2 = h * h;
  int small_run = 0;
  for (int m = 0; m < ctrl.max_terms; ++m) {
    term *= h2 / ((m + 1.0) * (sigma + m + 1.0));
    acc.add(term);
    if (term < ctrl.rel_tol * acc.value()) {
      if (++small_run >= ctrl.consecutive_small) return acc.value();
    } else {
      small_run = 0;
    }
  }
  throw convergence_error("bessel_i: term cap reached");
}

/// Confluent hypergeometric 1F1(a; b; x) by the ascending series.
inline complex hyp1f1(complex a, complex b, complex x, SeriesControl ctrl = {}) {
  ctrl.validate();
  const double br = b.real();
  if (std::abs(b.imag()) < 1e-14 && br <= 0.0 &&
      std::abs(br - std::round(br)) < 1e-12)
    throw pole_error("hyp1f1: b is a nonpositive integer");
  detail::KahanSumC acc;
  complex term = 1.0;
  acc.add(term);
  int small_run = 0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    const complex step = (a + static_cast<double>(k)) /
                         (b + static_cast<double>(k)) * x /
                         (k + 1.0);
    term *= step;
    acc.add(term);
    const double r = std::min(std::abs(step), 0.999);
    const double tail = std::abs(term) * r / (1.0 - r);
    const double scale = ctrl.rel_tol * std::max(std::abs(acc.value()),
                                                 std::numeric_limits<double>::min());
    if (std::abs(term) < scale && tail < scale) {
      if (++small_run >= ctrl.consecutive_small) return acc.value();
    } else {
      small_run = 0;
    }
  }
  throw convergence_error("hyp1f1: term cap reached");
}

// Target of the q -> 1 degeneration at alpha = -q^{2 nu}.
struct BGTarget {
  double nu;
  complex z;
  double x;
};

/// Squared normalization sum_n |z|^{2n} / (n! (2 nu)_n); equals
/// Gamma(2 nu) |z|^{1-2 nu} I_{2 nu - 1}(2 |z|).
inline double bg_norm_series(double nu, double abs_z, SeriesControl ctrl = {}) {
  ctrl.validate();
  detail::KahanSum acc;
  double term = 1.0;
  acc.add(term);
  const double z2 = abs_z * abs_z;
  int small_run = 0;
  for (int n = 0; n < ctrl.max_terms; ++n) {
    term *= z2 / ((n + 1.0) * (2.0 * nu + n));
    acc.add(term);
    if (term < ctrl.rel_tol * acc.value()) {
      if (++small_run >= ctrl.consecutive_small) return acc.value();
    } else {
      small_run = 0;
    }
  }
  throw convergence_error("bg_norm_series: term cap reached");
}

/// Closed-form limit wavefunction
///   |z|^{nu - 1/2} / sqrt(Gamma(2 nu) I_{2 nu - 1}(2 |z|))
///     x e^{i conj(z)} 1F1(nu + i x; 2 nu; -2 i conj(z)).
inline complex bg_wavefunction(const BGTarget& t, SeriesControl ctrl = {}) {
  if (!(t.nu > 0.0)) throw domain_error("bg_wavefunction: require nu > 0");
  const double az = std::abs(t.z);
  if (!(az > 0.0)) throw domain_error("bg_wavefunction: require z != 0");
  const double norm2 = gamma_fn(2.0 * t.nu) * std::pow(az, 1.0 - 2.0 * t.nu) *
                       bessel_i(2.0 * t.nu - 1.0, 2.0 * az, ctrl);
  const complex zbar = std::conj(t.z);
  const complex phase = std::exp(complex(0.0, 1.0) * zbar);
  const complex f = hyp1f1(complex(t.nu, t.x), complex(2.0 * t.nu),
                           complex(0.0, -2.0) * zbar, ctrl);
  return phase * f / std::sqrt(norm2);
}

/// Series route over normalized Meixner-Pollaczek polynomials,
///   norm^{-1/2} sum_n conj(z)^n P_n^{nu}(x; pi/2) / (2 nu)_n.
inline complex bg_wavefunction_series(const BGTarget& t, int n_terms = 200,
                                      SeriesControl ctrl = {}) {
  if (!(t.nu > 0.0)) throw domain_error("bg_wavefunction_series: require nu > 0");
  if (!(std::abs(t.z) > 0.0))
    throw domain_error("bg_wavefunction_series: require z != 0");
  const double norm2 = bg_norm_series(t.nu, std::abs(t.z), ctrl);
  const complex zbar = std::conj(t.z);
  detail::KahanSumC acc;
  double p_prev = 1.0;            // P_{n-1}
  double p_cur = 2.0 * t.x;       // P_n at n = 1
  complex zpow = 1.0;             // conj(z)^n
  double rising = 1.0;            // (2 nu)_n
  acc.add(complex(1.0));          // n = 0 term
  for (int n = 1; n <= n_terms; ++n) {
    zpow *= zbar;
    rising *= (2.0 * t.nu + n - 1.0);
    acc.add(zpow * p_cur / rising);
    const double p_next =
        (2.0 * t.x * p_cur - (n + 2.0 * t.nu - 1.0) * p_prev) / (n + 1.0);
    p_prev = p_cur;
    p_cur = p_next;
  }
  return acc.value() / std::sqrt(norm2);
}

struct SweepPoint {
  double q;
  double error;
};

/// Degeneration sweep: for each q, evaluates the closed-form wavefunction
/// with the substitutions z -> z sqrt(1-q), alpha -> -q^{2 nu},
/// e^{i theta} -> i q^{i x}, and returns the distance to the limit target.
/// Every substituted series argument is checked against its convergence
/// domain before evaluation.
inline std::vector<SweepPoint> limit_sweep_q_to_1(double nu, complex z,
                                                  double x,
                                                  std::span<const double> q_list,
                                                  SeriesControl ctrl = {}) {
  if (!(nu > 0.0)) throw domain_error("limit_sweep_q_to_1: require nu > 0");
  const complex target = bg_wavefunction({nu, z, x}, ctrl);
  std::vector<SweepPoint> out;
  out.reserve(q_list.size());
  for (double q : q_list) {
    detail::check_q(q);
    const double alpha = -std::pow(q, 2.0 * nu);
    const QParams p(q, alpha);
    const complex label = z * std::sqrt(1.0 - q);
    if (!(std::abs(label) < p.disk_radius))
      throw domain_error("limit_sweep_q_to_1: substituted label leaves the disk");
    const complex u = std::polar(1.0, 0.5 * M_PI + x * std::log(q));
    if (!(std::abs(std::conj(label)) * std::sqrt(1.0 - q) / std::abs(u) < 1.0))
      throw domain_error("limit_sweep_q_to_1: substituted argument leaves the disk");
    const complex val = wavefunction_closed_phase(label, u, p, ctrl);
    out.push_back({q, std::abs(val - target)});
  }
  return out;
}

// Largest residuals of the three alpha = 0 collapses.
struct AlphaZeroReport {
  double atom_residual;   // measure atoms vs (q;q)_inf q^k / (q;q)_k
  double phi_residual;    // phi_n vs normalized continuous q-Hermite
  double norm_residual;   // normalization vs e_q

  double max_residual() const {
    return std::max(atom_residual, std::max(phi_residual, norm_residual));
  }
};

/// Verifies the alpha = 0 specializations: Arik-Coon measure weights,
/// continuous q-Hermite basis, q-exponential normalization.
inline AlphaZeroReport arik_coon_reduction_report(const QParams& p,
                                                  SeriesControl ctrl = {}) {
  if (p.alpha != 0.0)
    throw domain_error("arik_coon_reduction_report: require alpha = 0");
  const double q = p.q;
  AlphaZeroReport rep{0.0, 0.0, 0.0};

  // atoms
  const DiscreteRadialMeasure meas = radial_measure(p, 1e-14, 20, ctrl);
  const double c_inf = q_pochhammer_inf(q, q, ctrl);
  double qk = 1.0, poch = 1.0;
  for (size_t k = 0; k < meas.atoms.size(); ++k) {
    const double ref = c_inf * qk / poch;
    rep.atom_residual =
        std::max(rep.atom_residual, std::abs(meas.atoms[k].weight - ref));
    qk *= q;
    poch *= (1.0 - qk);
  }

  // basis vs normalized continuous q-Hermite
  const int n_top = 12;
  for (double theta : {0.3, 0.9, 1.5, 2.1, 2.7}) {
    const ThetaPoint pt = ThetaPoint::from_theta(theta, p);
    const PolySequence phi = basis_phi(n_top, pt.x, p);
    const PolySequence h = q_hermite_cont(n_top, theta, q);
    double poch_n = 1.0;
    double qn = q;
    for (int n = 0; n <= n_top; ++n) {
      const double want = h[n] / std::sqrt(poch_n);
      rep.phi_residual = std::max(rep.phi_residual,
                                  std::abs(phi[n] - want) /
                                      std::max(1.0, std::abs(want)));
      poch_n *= (1.0 - qn);
      qn *= q;
    }
  }

  // normalization vs q-exponential
  for (int i = 1; i <= 9; ++i) {
    const double r2 = 0.1 * i / (1.0 - q);
    const double n_route = normalization(r2, p, ctrl);
    const double e_route =
        detail::require_real(q_exp(complex(r2), q, ctrl), "q_exp");
    rep.norm_residual = std::max(
        rep.norm_residual, std::abs(n_route - e_route) / std::abs(e_route));
  }
  return rep;
}

}  // namespace qcs

#endif  // QCS_LIMITS_HPP
