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

#ifndef QCS_ORTHOPOLY_HPP
#define QCS_ORTHOPOLY_HPP

#include <vector>

#include "qcs/common.hpp"
#include "qcs/qcore.hpp"

namespace qcs {

// Point on the support interval in both parametrizations:
// x = 2 cos(theta) / sqrt(1-q), theta in [0, pi]. The theta form is the
// primary one near the endpoints, where 4 - (1-q) x^2 cancels badly.
struct ThetaPoint {
  double theta;
  double x;

  static ThetaPoint from_theta(double theta, const QParams& p) {
    if (!(theta >= 0.0 && theta <= M_PI))
      throw domain_error("ThetaPoint: theta must lie in [0, pi]");
    return {theta, 2.0 * std::cos(theta) / std::sqrt(1.0 - p.q)};
  }

  static ThetaPoint from_x(double x, const QParams& p) {
    double u = x * std::sqrt(1.0 - p.q) / 2.0;
    if (std::abs(u) > 1.0) {
      if (std::abs(u) > 1.0 + 1e-12)
        throw domain_error("ThetaPoint: x outside the support interval");
      u = (u > 0.0) ? 1.0 : -1.0;
    }
    return {std::acos(u), x};
  }
};

enum class PolyFamily {
  al_salam_chihara,
  orthonormal_basis,
  monic,
  continuous_q_hermite,
  meixner_pollaczek,
};

// Values of one polynomial family at a fixed point, indices 0..n_max.
struct PolySequence {
  PolyFamily family;
  std::vector<double> values;

  double operator[](int n) const { return values[static_cast<size_t>(n)]; }
  int degree_max() const { return static_cast<int>(values.size()) - 1; }
};

/// Symmetric-case Al-Salam-Chihara values Q_n(x sqrt(1-q)/2; a, -a | q) for
/// n = 0..n_max, where only a^2 = alpha enters the recurrence
///   2 xi Q_n = Q_{n+1} + (1 - q^n)(1 + alpha q^{n-1}) Q_{n-1},
/// so the evaluation stays real for alpha of either sign.
inline PolySequence asc_eval_sym(int n_max, double x, const QParams& p) {
  detail::check_nonneg(n_max, "asc_eval_sym");
  const double xi = x * std::sqrt(1.0 - p.q) / 2.0;
  PolySequence seq{PolyFamily::al_salam_chihara, {}};
  seq.values.resize(static_cast<size_t>(n_max) + 1);
  seq.values[0] = 1.0;
  if (n_max == 0) return seq;
  seq.values[1] = 2.0 * xi;
  double qn = p.q;        // q^n
  double qnm1 = 1.0;      // q^{n-1}
  for (int n = 1; n < n_max; ++n) {
    seq.values[static_cast<size_t>(n) + 1] =
        2.0 * xi * seq.values[static_cast<size_t>(n)] -
        (1.0 - qn) * (1.0 + p.alpha * qnm1) * seq.values[static_cast<size_t>(n) - 1];
    qnm1 = qn;
    qn *= p.q;
  }
  return seq;
}

namespace detail {

// Terminating hypergeometric representation of Al-Salam-Chihara,
//   Q_n(cos theta; a, b | q) = (ab; q)_n a^{-n}
//       3phi2(q^{-n}, a e^{i theta}, a e^{-i theta}; ab, 0 | q; q),
// evaluated through the generating-function expansion
//   Q_n = sum_k [n;k]_q (a e^{-i theta}; q)_k (b e^{i theta}; q)_{n-k}
//            e^{i (2k - n) theta}.
// The two are the same terminating polynomial; the alternating q^{-n} sum
// amplifies roundoff by ~q^{-n(n-1)/2}, which already exceeds double range
// of significance near n = 12, so the expanded form is the one evaluated.
inline complex asc_qbinomial_sum(int n, complex u /* e^{i theta} */, complex a,
                                 complex b, double q) {
  const complex uinv = 1.0 / u;
  // (b e^{i theta}; q)_j for j = 0..n
  std::vector<complex> poch_b(static_cast<size_t>(n) + 1);
  poch_b[0] = 1.0;
  {
    complex f = b * u;
    for (int j = 1; j <= n; ++j) {
      poch_b[static_cast<size_t>(j)] = poch_b[static_cast<size_t>(j) - 1] * (1.0 - f);
      f *= q;
    }
  }
  KahanSumC acc;
  complex poch_a = 1.0;        // (a e^{-i theta}; q)_k
  double binom = 1.0;          // [n; k]_q
  complex phase = std::pow(uinv, n);  // e^{i (2k - n) theta}
  complex fa = a * uinv;
  double qk1 = q;              // q^{k+1}
  double qnk = std::pow(q, n); // q^{n-k}
  for (int k = 0; k <= n; ++k) {
    acc.add(binom * poch_a * poch_b[static_cast<size_t>(n - k)] * phase);
    if (k == n) break;
    binom *= (1.0 - qnk) / (1.0 - qk1);
    qnk /= q;
    qk1 *= q;
    poch_a *= (1.0 - fa);
    fa *= q;
    phase *= u * u;
  }
  return acc.value();
}

}  // namespace detail

/// General Al-Salam-Chihara value Q_n(cos theta; a, b | q) from the
/// terminating 3phi2 representation (see detail::asc_qbinomial_sum for the
/// evaluation route). The printed prefactor a^{-n} makes a = 0 ill-posed.
inline complex asc_eval_3phi2(int n, double theta, complex a, complex b,
                              double q) {
  detail::check_q(q);
  detail::check_nonneg(n, "asc_eval_3phi2");
  if (n > 0 && std::abs(a) == 0.0)
    throw domain_error("asc_eval_3phi2: a = 0 makes the a^{-n} prefactor ill-posed");
  const complex u = std::polar(1.0, theta);
  return detail::asc_qbinomial_sum(n, u, a, b, q);
}

/// Orthonormal basis values phi_n(x) = ((-alpha, q; q)_n)^{-1/2}
/// Q_n(x sqrt(1-q)/2; sqrt(alpha), -sqrt(alpha) | q), n = 0..n_max.
/// x must lie in the closure of the support interval.
inline PolySequence basis_phi(int n_max, double x, const QParams& p) {
  if (std::abs(x) > p.interval_halfwidth * (1.0 + 1e-12))
    throw domain_error("basis_phi: x outside the support interval");
  PolySequence seq = asc_eval_sym(n_max, x, p);
  seq.family = PolyFamily::orthonormal_basis;
  double norm2 = 1.0;  // (-alpha; q)_n (q; q)_n
  double qn = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    norm2 *= (1.0 + p.alpha * qn) * (1.0 - qn * p.q);
    qn *= p.q;
    seq.values[static_cast<size_t>(n)] /= std::sqrt(norm2);
  }
  return seq;
}

inline PolySequence basis_phi(int n_max, const ThetaPoint& pt, const QParams& p) {
  return basis_phi(n_max, pt.x, p);
}

/// Monic family P_n with P_n = sqrt(x_n!) phi_n, generated by its own
/// recurrence x P_n = P_{n+1} + x_n P_{n-1}.
inline PolySequence p_monic_eval(int n_max, double x, const QParams& p) {
  detail::check_nonneg(n_max, "p_monic_eval");
  PolySequence seq{PolyFamily::monic, {}};
  seq.values.resize(static_cast<size_t>(n_max) + 1);
  seq.values[0] = 1.0;
  if (n_max == 0) return seq;
  seq.values[1] = x;
  for (int n = 1; n < n_max; ++n) {
    seq.values[static_cast<size_t>(n) + 1] =
        x * seq.values[static_cast<size_t>(n)] -
        x_seq(n, p) * seq.values[static_cast<size_t>(n) - 1];
  }
  return seq;
}

/// Continuous q-Hermite values H_n(cos theta | q) via
/// 2 xi H_n = H_{n+1} + (1 - q^n) H_{n-1}.
inline PolySequence q_hermite_cont(int n_max, double theta, double q) {
  detail::check_q(q);
  detail::check_nonneg(n_max, "q_hermite_cont");
  if (!(theta >= 0.0 && theta <= M_PI))
    throw domain_error("q_hermite_cont: theta must lie in [0, pi]");
  const double xi = std::cos(theta);
  PolySequence seq{PolyFamily::continuous_q_hermite, {}};
  seq.values.resize(static_cast<size_t>(n_max) + 1);
  seq.values[0] = 1.0;
  if (n_max == 0) return seq;
  seq.values[1] = 2.0 * xi;
  double qn = q;
  for (int n = 1; n < n_max; ++n) {
    seq.values[static_cast<size_t>(n) + 1] =
        2.0 * xi * seq.values[static_cast<size_t>(n)] -
        (1.0 - qn) * seq.values[static_cast<size_t>(n) - 1];
    qn *= q;
  }
  return seq;
}

/// Rogers-Szego polynomial h_n(z | q) = sum_k [n choose k]_q z^k, via the
/// recurrence h_{n+1} = (1 + z) h_n - (1 - q^n) z h_{n-1}.
inline double rogers_szego(int n, double z, double q) {
  detail::check_q(q);
  detail::check_nonneg(n, "rogers_szego");
  if (n == 0) return 1.0;
  double hm = 1.0;
  double h = 1.0 + z;
  double qk = q;
  for (int k = 1; k < n; ++k) {
    const double hn = (1.0 + z) * h - (1.0 - qk) * z * hm;
    hm = h;
    h = hn;
    qk *= q;
  }
  return h;
}

/// Normalized Meixner-Pollaczek values at phase pi/2:
/// phi_n(x) = P_n^{nu}(x; pi/2) sqrt(n! / (2 nu)_n), with the standard
/// recurrence (n+1) P_{n+1} = 2 x P_n - (n + 2 nu - 1) P_{n-1}.
inline PolySequence meixner_pollaczek_norm(int n_max, double x, double nu) {
  detail::check_nonneg(n_max, "meixner_pollaczek_norm");
  if (!(nu > 0.0)) throw domain_error("meixner_pollaczek_norm: require nu > 0");
  PolySequence seq{PolyFamily::meixner_pollaczek, {}};
  seq.values.resize(static_cast<size_t>(n_max) + 1);
  std::vector<double> P(static_cast<size_t>(n_max) + 1);
  P[0] = 1.0;
  if (n_max >= 1) P[1] = 2.0 * x;
  for (int n = 1; n < n_max; ++n) {
    P[static_cast<size_t>(n) + 1] =
        (2.0 * x * P[static_cast<size_t>(n)] -
         (n + 2.0 * nu - 1.0) * P[static_cast<size_t>(n) - 1]) /
        (n + 1.0);
  }
  double scale2 = 1.0;  // n! / (2 nu)_n
  seq.values[0] = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    scale2 *= n / (2.0 * nu + n - 1.0);
    seq.values[static_cast<size_t>(n)] = P[static_cast<size_t>(n)] * std::sqrt(scale2);
  }
  return seq;
}

}  // namespace qcs

#endif  // QCS_ORTHOPOLY_HPP
