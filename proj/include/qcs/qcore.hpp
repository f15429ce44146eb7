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

#ifndef QCS_QCORE_HPP
#define QCS_QCORE_HPP

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "qcs/common.hpp"

namespace qcs {

/// q-bracket [n]_q = (1 - q^n) / (1 - q).
/// Evaluated through expm1/log so that the q -> 1 regime keeps full accuracy.
inline double q_bracket(int n, double q) {
  detail::check_q(q);
  detail::check_nonneg(n, "q_bracket");
  if (n == 0) return 0.0;
  return -std::expm1(static_cast<double>(n) * std::log(q)) / (1.0 - q);
}

/// q-factorial [n]_q! = prod_{k=1..n} [k]_q, with [0]_q! = 1.
inline double q_factorial(int n, double q) {
  detail::check_q(q);
  detail::check_nonneg(n, "q_factorial");
  double p = 1.0;
  for (int k = 1; k <= n; ++k) p *= q_bracket(k, q);
  return p;
}

/// Finite q-Pochhammer symbol (a; q)_n = prod_{k=0..n-1} (1 - a q^k).
inline complex q_pochhammer(complex a, double q, int n) {
  detail::check_q(q);
  detail::check_nonneg(n, "q_pochhammer");
  complex p = 1.0;
  double qk = 1.0;
  for (int k = 0; k < n; ++k) {
    p *= (1.0 - a * qk);
    qk *= q;
  }
  return p;
}

inline double q_pochhammer(double a, double q, int n) {
  return q_pochhammer(complex(a, 0.0), q, n).real();
}

/// Infinite q-Pochhammer (a; q)_inf. The product is cut once the remaining
/// factors can no longer move the result by rel_tol: the log-tail of
/// prod_{j>=k}(1 - a q^j) is bounded by |a| q^k / (1-q).
inline complex q_pochhammer_inf(complex a, double q, SeriesControl ctrl = {}) {
  detail::check_q(q);
  ctrl.validate();
  if (!(std::abs(a) < std::numeric_limits<double>::infinity()))
    throw domain_error("q_pochhammer_inf: argument must be finite");
  complex p = 1.0;
  double mag = std::abs(a);
  const double geom = 1.0 / (1.0 - q);
  complex aq = a;
  int small_run = 0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    if (mag * geom < ctrl.rel_tol) {
      if (++small_run >= ctrl.consecutive_small) return p;
    } else {
      small_run = 0;
    }
    p *= (1.0 - aq);
    aq *= q;
    mag *= q;
  }
  throw convergence_error("q_pochhammer_inf: term cap reached");
}

inline double q_pochhammer_inf(double a, double q, SeriesControl ctrl = {}) {
  return q_pochhammer_inf(complex(a, 0.0), q, ctrl).real();
}

/// q-exponential e_q(xi) = sum_n xi^n / [n]_q!, convergent for |xi|(1-q) < 1,
/// where it equals 1 / ((xi (1-q); q)_inf.
inline complex q_exp(complex xi, double q, SeriesControl ctrl = {}) {
  detail::check_q(q);
  ctrl.validate();
  if (!(std::abs(xi) * (1.0 - q) < 1.0))
    throw domain_error("q_exp: require |xi| (1-q) < 1");
  detail::KahanSumC acc;
  complex term = 1.0;
  acc.add(term);
  int small_run = 0;
  for (int n = 1; n < ctrl.max_terms; ++n) {
    term *= xi / q_bracket(n, q);
    acc.add(term);
    // ratio of consecutive terms decreases towards |xi|(1-q) < 1
    const double r = std::abs(xi) / q_bracket(n + 1, q);
    const double tail = (r < 1.0) ? std::abs(term) * r / (1.0 - r)
                                  : std::numeric_limits<double>::infinity();
    const double scale = ctrl.rel_tol * std::abs(acc.value());
    if (std::abs(term) < scale && tail < scale) {
      if (++small_run >= ctrl.consecutive_small) return acc.value();
    } else {
      small_run = 0;
    }
  }
  throw convergence_error("q_exp: term cap reached");
}

/// Basic hypergeometric series
///   m_phi_s(a_1..a_m; b_1..b_s | q; xi)
///     = sum_k (a_1..a_m; q)_k / (b_1..b_s; q)_k
///       [(-1)^k q^C(k,2)]^{1+s-m} xi^k / (q; q)_k.
/// Terminating when some a_i = q^{-N} (detected up front, summed to exactly
/// N+1 terms). Throws pole_error when a denominator factor vanishes and
/// convergence_error when a non-terminating series fails its tail test.
inline complex basic_hypergeometric(const std::vector<complex>& a,
                                    const std::vector<complex>& b, double q,
                                    complex xi, SeriesControl ctrl = {}) {
  detail::check_q(q);
  ctrl.validate();
  const int excess = 1 + static_cast<int>(b.size()) - static_cast<int>(a.size());

  // detect a terminating upper parameter a_i = q^{-N}
  int terminate_at = -1;
  for (const complex& ai : a) {
    if (ai.real() > 1.0 && std::abs(ai.imag()) < 1e-14 * ai.real()) {
      const double nf = -std::log(ai.real()) / std::log(q);
      const int N = static_cast<int>(std::lround(nf));
      if (N >= 0 && std::abs(ai.real() * std::pow(q, N) - 1.0) < 1e-8) {
        terminate_at = (terminate_at < 0) ? N : std::min(terminate_at, N);
      }
    }
  }
  if (excess < 0 && terminate_at < 0)
    throw convergence_error("basic_hypergeometric: divergent for m > s + 1");

  detail::KahanSumC acc;
  complex term = 1.0;
  acc.add(term);
  double qk = 1.0;  // q^k
  double qk1 = q;   // q^{k+1}
  int small_run = 0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    if (terminate_at >= 0 && k == terminate_at) return acc.value();
    complex num = 1.0;
    for (const complex& ai : a) num *= (1.0 - ai * qk);
    complex den = 1.0;
    for (const complex& bj : b) {
      const complex f = 1.0 - bj * qk;
      if (std::abs(f) < 1e-14 * (1.0 + std::abs(bj * qk)))
        throw pole_error("basic_hypergeometric: denominator Pochhammer vanishes");
      den *= f;
    }
    complex step = num / den * xi / (1.0 - qk1);
    if (excess != 0) {
      double f = 1.0;  // (-q^k)^excess, kept in real arithmetic
      for (int e = 0; e < std::abs(excess); ++e) f *= -qk;
      if (excess > 0)
        step *= f;
      else
        step /= f;
    }
    term *= step;
    acc.add(term);
    qk = qk1;
    qk1 *= q;

    if (terminate_at >= 0) continue;  // exact term count, no tail test
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
  if (terminate_at >= 0) return acc.value();
  throw convergence_error("basic_hypergeometric: term cap reached");
}

namespace detail {

// 2phi1 with the two upper parameters +/- c entering only through their
// product: sum_k (A; q^2)_k / ((-alpha; q)_k (q; q)_k) xi^k, where
// A = c^2 u^{+-2}. Pairing the conjugate Pochhammer factors keeps alpha < 0
// on a real parameter path (no square-root branch).
inline complex hyp2phi1_paired(complex A, double alpha, double q, complex xi,
                               SeriesControl ctrl = {}) {
  check_q(q);
  ctrl.validate();
  KahanSumC acc;
  complex term = 1.0;
  acc.add(term);
  double qk = 1.0;   // q^k
  double q2k = 1.0;  // q^{2k}
  const double q2 = q * q;
  int small_run = 0;
  for (int k = 0; k < ctrl.max_terms; ++k) {
    const complex step =
        (1.0 - A * q2k) / ((1.0 + alpha * qk) * (1.0 - qk * q)) * xi;
    term *= step;
    acc.add(term);
    qk *= q;
    q2k *= q2;
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
  throw convergence_error("hyp2phi1_paired: term cap reached");
}

}  // namespace detail

/// Deformed sequence x_n = (1 + alpha q^{n-1}) [n]_q, with x_0 = 0.
inline double x_seq(int n, const QParams& p) {
  detail::check_nonneg(n, "x_seq");
  if (n == 0) return 0.0;
  return (1.0 + p.alpha * std::pow(p.q, n - 1)) * q_bracket(n, p.q);
}

/// Generalized factorial x_n! = (-alpha; q)_n [n]_q! = prod_{k=1..n} x_k,
/// with x_0! = 1. Strictly positive for all n on the valid parameter range.
inline double x_factorial(int n, const QParams& p) {
  detail::check_nonneg(n, "x_factorial");
  double prod = 1.0;
  double qk = 1.0;  // q^{k-1}
  for (int k = 1; k <= n; ++k) {
    prod *= (1.0 + p.alpha * qk) * q_bracket(k, p.q);
    qk *= p.q;
  }
  return prod;
}

}  // namespace qcs

#endif  // QCS_QCORE_HPP
