#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "qcs/states.hpp"
#include "reference_values.hpp"

using qcs::complex;
using qcs::FockVector;
using qcs::QParams;
using qcs::ThetaPoint;

TEST_CASE("normalization: values, cross routes, domain") {
  const QParams p(0.5, 0.25);
  CHECK(qcs::normalization(0.0, p) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(qcs::normalization(1.0, p) ==
        doctest::Approx(qcs_ref::kNorm_q05_al025_r2_1).epsilon(1e-13));
  CHECK_THROWS_AS(qcs::normalization(2.0, p), qcs::domain_error);

  // against the direct sum of r^{2n}/x_n!
  for (double q : {0.3, 0.5, 0.8}) {
    for (double alpha : {-0.5, 0.0, 0.25}) {
      const QParams pp(q, alpha);
      for (double frac : {0.2, 0.6, 0.9}) {
        const double r2 = frac / (1.0 - q);
        qcs::detail::KahanSum direct;
        double term = 1.0;
        int n = 0;
        while (term > 1e-18 && n < 2000) {
          direct.add(term);
          ++n;
          term *= r2 / qcs::x_seq(n, pp);
        }
        const double v = qcs::normalization(r2, pp);
        CHECK(v >= 1.0);
        CHECK(v == doctest::Approx(direct.value()).epsilon(1e-12));
      }
    }
  }

  // alpha = 0 is the q-exponential
  const QParams p0(0.5, 0.0);
  for (double r2 : {0.3, 1.0, 1.8}) {
    const double want = qcs::q_exp(complex(r2), p0.q).real();
    CHECK(qcs::normalization(r2, p0) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("reproducing kernel: diagonal, Hermitian symmetry, series route") {
  const QParams p(0.5, 0.25);
  const complex z(0.6, 0.3), w(-0.4, 0.55);
  CHECK(qcs::reproducing_kernel(z, complex(0.0), p) == complex(1.0));

  const complex kzz = qcs::reproducing_kernel(z, z, p);
  CHECK(std::abs(kzz - qcs::normalization(std::norm(z), p)) < 1e-13 *
        std::abs(kzz));
  const complex kzw = qcs::reproducing_kernel(z, w, p);
  const complex kwz = qcs::reproducing_kernel(w, z, p);
  CHECK(std::abs(kzw - std::conj(kwz)) < 1e-14 * std::abs(kzw));

  // power series route sum_j (z conj(w))^j / x_j!
  for (double q : {0.3, 0.8}) {
    for (double alpha : {-0.5, 0.25}) {
      const QParams pp(q, alpha);
      const complex zz = 0.7 * pp.disk_radius * std::polar(1.0, 0.9);
      const complex ww = 0.65 * pp.disk_radius * std::polar(1.0, -2.0);
      qcs::detail::KahanSumC series;
      complex term = 1.0;
      int j = 0;
      while (std::abs(term) > 1e-18 && j < 2000) {
        series.add(term);
        ++j;
        term *= zz * std::conj(ww) / qcs::x_seq(j, pp);
      }
      const complex v = qcs::reproducing_kernel(zz, ww, pp);
      CHECK(std::abs(v - series.value()) <= 1e-10 * std::abs(v));
    }
  }
  CHECK_THROWS_AS(qcs::reproducing_kernel(complex(1.001 * p.disk_radius),
                                          complex(1.001 * p.disk_radius), p),
                  qcs::domain_error);
}

namespace {

// smallest eigenvalue of a 3x3 Hermitian matrix via the characteristic cubic
double min_eig3(const complex m[3][3]) {
  const double tr = (m[0][0] + m[1][1] + m[2][2]).real();
  double sum2 = 0.0;  // sum of principal 2x2 minors
  sum2 += (m[0][0] * m[1][1] - m[0][1] * m[1][0]).real();
  sum2 += (m[0][0] * m[2][2] - m[0][2] * m[2][0]).real();
  sum2 += (m[1][1] * m[2][2] - m[1][2] * m[2][1]).real();
  const complex det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                      m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  // lambda^3 - tr lambda^2 + sum2 lambda - det = 0; shift to y = lambda - tr/3
  const double pcoef = sum2 - tr * tr / 3.0;
  const double qcoef =
      -2.0 * tr * tr * tr / 27.0 + tr * sum2 / 3.0 - det.real();
  const double s = std::sqrt(std::max(0.0, -pcoef / 3.0));
  if (s == 0.0) return tr / 3.0;
  double c = 3.0 * qcoef / (2.0 * pcoef * s);
  c = std::min(1.0, std::max(-1.0, c));
  const double phi = std::acos(c) / 3.0;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    const double y = 2.0 * s * std::cos(phi - 2.0 * M_PI * k / 3.0);
    best = std::min(best, y + tr / 3.0);
  }
  return best;
}

}  // namespace

TEST_CASE("kernel Gram matrices are positive semidefinite") {
  for (double q : {0.3, 0.5, 0.8}) {
    for (double alpha : {-0.5, 0.0, 0.25}) {
      const QParams p(q, alpha);
      const complex zs[3] = {0.5 * p.disk_radius * std::polar(1.0, 0.4),
                             0.7 * p.disk_radius * std::polar(1.0, 2.8),
                             0.3 * p.disk_radius * std::polar(1.0, -1.3)};
      complex mkw[3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          mkw[i][j] = qcs::reproducing_kernel(zs[i], zs[j], p);
      CHECK(min_eig3(mkw) >= -1e-10);
    }
  }
}

TEST_CASE("cs_coefficients: vacuum, norm convergence, unit overlap") {
  const QParams p(0.5, 0.25);
  const qcs::CoherentState vac = qcs::cs_coefficients(complex(0.0), 6, p);
  CHECK(vac.coeffs[0] == complex(1.0));
  for (int n = 1; n <= 6; ++n) CHECK(vac.coeffs[static_cast<size_t>(n)] == complex(0.0));

  const complex z = 0.8 * p.disk_radius * std::polar(1.0, 0.7);
  const double norm_target = qcs::normalization(std::norm(z), p);
  double prev = 0.0;
  for (int n_max : {4, 8, 16, 32, 64}) {
    const qcs::CoherentState st = qcs::cs_coefficients(z, n_max, p);
    qcs::detail::KahanSum s;
    for (const complex& c : st.coeffs) s.add(std::norm(c));
    CHECK(s.value() >= prev);          // monotone in the truncation order
    CHECK(s.value() <= norm_target * (1.0 + 1e-12));
    prev = s.value();
  }
  // default truncation reaches the normalization factor
  const qcs::CoherentState st = qcs::cs_coefficients(z, -1, p);
  qcs::detail::KahanSum s;
  for (const complex& c : st.coeffs) s.add(std::norm(c));
  CHECK(s.value() == doctest::Approx(norm_target).epsilon(1e-10));
  CHECK(s.value() / norm_target == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(qcs::cs_coefficients(complex(p.disk_radius), 5, p),
                  qcs::domain_error);
}

TEST_CASE("overlap of two states matches the kernel") {
  const QParams p(0.5, 0.25);
  const complex z = 0.6 * p.disk_radius * std::polar(1.0, 0.3);
  const complex w = 0.5 * p.disk_radius * std::polar(1.0, -1.9);
  const qcs::CoherentState sz = qcs::cs_coefficients(z, -1, p);
  const qcs::CoherentState sw = qcs::cs_coefficients(w, -1, p);
  qcs::detail::KahanSumC acc;
  const int top = std::min(sz.n_max, sw.n_max);
  // <theta_w, theta_z> = sum conj(c_n(w)) c_n(z) / sqrt(N(w) N(z)),
  // antilinear in the first slot
  for (int n = 0; n <= top; ++n)
    acc.add(std::conj(sw.coeffs[static_cast<size_t>(n)]) *
            sz.coeffs[static_cast<size_t>(n)]);
  const complex overlap =
      acc.value() / std::sqrt(qcs::normalization(std::norm(z), p) *
                              qcs::normalization(std::norm(w), p));
  const complex want =
      qcs::reproducing_kernel(w, z, p) /
      std::sqrt(qcs::normalization(std::norm(z), p) *
                qcs::normalization(std::norm(w), p));
  CHECK(std::abs(overlap - want) < 1e-10);
  CHECK(std::abs(overlap) < 1.0);  // strict for w != z
}

TEST_CASE("wavefunction series vs closed form") {
  const QParams p(0.5, 0.25);
  CHECK(qcs::wavefunction_series(complex(0.0), 0.4, p) == complex(1.0));
  const ThetaPoint pt0 = ThetaPoint::from_theta(1.0, p);
  CHECK(qcs::wavefunction_closed(complex(0.0), pt0, p) == complex(1.0));

  // frozen sample point
  const complex z(0.6, 0.3);
  const complex closed = qcs::wavefunction_closed(z, pt0, p);
  CHECK(std::abs(closed - qcs_ref::kWavefunction_sample) < 1e-12);

  for (double q : {0.3, 0.5, 0.8}) {
    for (double alpha : {-0.5, 0.0, 0.25}) {
      const QParams pp(q, alpha);
      for (double zmod : {0.3, 0.75}) {
        for (double zarg : {0.0, 2.1}) {
          const complex zz = zmod * pp.disk_radius * std::polar(1.0, zarg);
          for (double theta : {0.6, 1.5, 2.5}) {
            const ThetaPoint pt = ThetaPoint::from_theta(theta, pp);
            double tail = 0.0;
            const complex series =
                qcs::wavefunction_series(zz, pt.x, pp, -1, &tail);
            const complex closed2 = qcs::wavefunction_closed(zz, pt, pp);
            CHECK(std::abs(series - closed2) < 1e-9);
            CHECK(tail < 1e-9);
          }
        }
      }
    }
  }
}

TEST_CASE("ladder operators") {
  const QParams p(0.5, 0.25);
  const int top = 6;
  double dropped = 0.0;

  // lowering annihilates the vacuum
  const FockVector vac = FockVector::basis(0, top);
  const FockVector avac = qcs::ladder_apply(vac, qcs::LadderOp::lower, p);
  CHECK(avac.norm() == 0.0);

  // a phi_1 = sqrt(2 x_1) phi_0 = sqrt(2 (1 + alpha)) phi_0
  const FockVector one = FockVector::basis(1, top);
  const FockVector lowered = qcs::ladder_apply(one, qcs::LadderOp::lower, p);
  CHECK(lowered.coeffs[0].real() ==
        doctest::Approx(std::sqrt(2.0 * (1.0 + p.alpha))).epsilon(1e-15));

  // (a a* - a* a) phi_n = 2 (x_{n+1} - x_n) phi_n
  for (int n = 0; n + 1 < top; ++n) {
    const FockVector e = FockVector::basis(n, top);
    const FockVector up = qcs::ladder_apply(e, qcs::LadderOp::raise, p, &dropped);
    CHECK(dropped == 0.0);
    const FockVector ada = qcs::ladder_apply(up, qcs::LadderOp::lower, p);
    const FockVector down = qcs::ladder_apply(e, qcs::LadderOp::lower, p);
    const FockVector aad = qcs::ladder_apply(down, qcs::LadderOp::raise, p);
    const complex comm = ada.coeffs[static_cast<size_t>(n)] -
                         aad.coeffs[static_cast<size_t>(n)];
    const double want = 2.0 * (qcs::x_seq(n + 1, p) - qcs::x_seq(n, p));
    CHECK(comm.real() == doctest::Approx(want).epsilon(1e-13));
  }

  // raising the top basis vector drops amplitude past the truncation
  const FockVector toppy = FockVector::basis(top, top);
  const FockVector up = qcs::ladder_apply(toppy, qcs::LadderOp::raise, p, &dropped);
  CHECK(up.norm() == 0.0);
  CHECK(dropped == doctest::Approx(std::sqrt(2.0 * qcs::x_seq(top + 1, p))));
}

TEST_CASE("position operator: action, symmetry, pointwise recurrence") {
  const QParams p(0.5, 0.25);
  const int top = 8;
  const FockVector vac = FockVector::basis(0, top);
  const FockVector qvac = qcs::position_apply(vac, p);
  CHECK(qvac.coeffs[1].real() ==
        doctest::Approx(std::sqrt(qcs::x_seq(1, p))).epsilon(1e-15));
  for (int n = 0; n <= top; ++n)
    if (n != 1) CHECK(std::abs(qvac.coeffs[static_cast<size_t>(n)]) == 0.0);

  // matrix of Q on the truncated space is real symmetric tridiagonal
  std::vector<std::vector<complex>> mat(static_cast<size_t>(top) + 1);
  for (int nn = 0; nn <= top; ++nn) {
    const FockVector col = qcs::position_apply(FockVector::basis(nn, top), p);
    mat[static_cast<size_t>(nn)] = col.coeffs;
  }
  for (int i = 0; i <= top; ++i) {
    for (int j = 0; j <= top; ++j) {
      CHECK(mat[static_cast<size_t>(i)][static_cast<size_t>(j)].imag() == 0.0);
      CHECK(mat[static_cast<size_t>(i)][static_cast<size_t>(j)].real() ==
            doctest::Approx(
                mat[static_cast<size_t>(j)][static_cast<size_t>(i)].real()));
      if (std::abs(i - j) > 1)
        CHECK(mat[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
              complex(0.0));
    }
  }

  // x phi_n(x) = sqrt(x_n) phi_{n-1}(x) + sqrt(x_{n+1}) phi_{n+1}(x)
  for (double theta : {0.7, 1.9}) {
    const ThetaPoint pt = ThetaPoint::from_theta(theta, p);
    const qcs::PolySequence f = qcs::basis_phi(top + 1, pt.x, p);
    for (int n = 1; n <= top; ++n) {
      const double lhs = pt.x * f[n];
      const double rhs = std::sqrt(qcs::x_seq(n, p)) * f[n - 1] +
                         std::sqrt(qcs::x_seq(n + 1, p)) * f[n + 1];
      CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST_CASE("truncated position matrix spectrum stays inside the interval") {
  for (double q : {0.3, 0.5, 0.8}) {
    for (double alpha : {-0.5, 0.0, 0.25}) {
      const QParams p(q, alpha);
      const auto [lo, hi] = qcs::position_spectrum_bounds(60, p);
      CHECK(hi < p.interval_halfwidth);
      CHECK(lo > -p.interval_halfwidth);
      CHECK(lo == doctest::Approx(-hi).epsilon(1e-10));
    }
  }
}

TEST_CASE("identity resolution matrix entries") {
  const QParams p(0.5, 0.25);
  CHECK(qcs::identity_resolution_check(2, 5, p, 1e-8) == 0.0);
  CHECK(qcs::identity_resolution_check(0, 0, p, 1e-10) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(qcs::identity_resolution_check(4, 4, p, 1e-8) ==
        doctest::Approx(1.0).epsilon(1e-8));
  for (double q : {0.3, 0.5, 0.8}) {
    for (double alpha : {-0.5, 0.0, 0.25}) {
      const QParams pp(q, alpha);
      for (int n = 0; n <= 8; ++n)
        CHECK(qcs::identity_resolution_check(n, n, pp, 1e-8) ==
              doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}
