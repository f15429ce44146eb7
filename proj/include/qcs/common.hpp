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

#ifndef QCS_COMMON_HPP
#define QCS_COMMON_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace qcs {

using complex = std::complex<double>;

// Thrown when an argument leaves the mathematical domain of an operation
// (e.g. a point outside the disk of convergence or the support interval).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when a series or infinite product fails its tail criterion
// before the term cap is reached.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a denominator Pochhammer factor vanishes.
class pole_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a quantity that must be nonnegative comes out negative
// beyond tolerance (signals a parameter or formula error upstream).
class positivity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truncation control shared by all series and infinite products.
struct SeriesControl {
  double rel_tol = 1e-13;
  int max_terms = 100000;
  int consecutive_small = 3;

  void validate() const {
    if (!(rel_tol > 0.0)) throw domain_error("SeriesControl: rel_tol must be > 0");
    if (max_terms < 1) throw domain_error("SeriesControl: max_terms must be >= 1");
    if (consecutive_small < 1)
      throw domain_error("SeriesControl: consecutive_small must be >= 1");
  }
};

// Deformation parameter pair (q, alpha) with the derived domain constants:
// the label disk |z| < disk_radius and the support interval
// (-interval_halfwidth, interval_halfwidth).
struct QParams {
  double q;
  double alpha;
  double disk_radius;         // (1-q)^{-1/2}
  double interval_halfwidth;  // 2 (1-q)^{-1/2}

  QParams(double q_, double alpha_) : q(q_), alpha(alpha_) {
    if (!(q > 0.0 && q < 1.0)) throw domain_error("QParams: require 0 < q < 1");
    if (!(alpha > -1.0 && alpha < q))
      throw domain_error("QParams: require -1 < alpha < q");
    disk_radius = 1.0 / std::sqrt(1.0 - q);
    interval_halfwidth = 2.0 * disk_radius;
  }
};

namespace detail {

// Neumaier compensated accumulator.
class KahanSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class KahanSumC {
 public:
  void add(const complex& x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  complex value() const { return {re_.value(), im_.value()}; }

 private:
  KahanSum re_, im_;
};

inline void check_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw domain_error("require 0 < q < 1");
}

inline void check_nonneg(int n, const char* what) {
  if (n < 0) throw domain_error(std::string(what) + ": index must be nonnegative");
}

// Real-typed wrapper around a complex evaluation path: the imaginary part
// must be numerical noise only.
inline double require_real(const complex& v, const char* what,
                           double tol = 1e-12) {
  const double scale = std::max(1.0, std::abs(v));
  if (std::abs(v.imag()) > tol * scale)
    throw domain_error(std::string(what) + ": unexpected imaginary part");
  return v.real();
}

}  // namespace detail

}  // namespace qcs

#endif  // QCS_COMMON_HPP
