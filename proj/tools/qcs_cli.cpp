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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcs/qcs.hpp"

namespace {

using json = nlohmann::json;
using qcs::complex;
using qcs::QParams;
using qcs::SeriesControl;
using qcs::ThetaPoint;

// 17 significant digits, scientific, locale-independent: doubles round-trip.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

struct RunConfig {
  double q = 0.5;
  double alpha = 0.25;
  bool q_set = false;
  bool alpha_set = false;
  int n_max = 10;
  double tol = 1e-13;
  int quad_order = 400;
  double atoms_tol = 1e-12;
  std::string format = "csv";
  std::string out;

  // subject arguments
  int n = 0;
  double x = 0.0;
  bool x_set = false;
  double theta = M_PI / 2.0;
  double r2 = 1.0;
  double z_re = 0.4, z_im = 0.0;
  double a_re = 0.5, a_im = 0.0;
  double xi_re = 1.0, xi_im = 0.0;
  double nu = 1.0;
  bool poch_inf = false;

  SeriesControl ctrl() const {
    SeriesControl c;
    c.rel_tol = tol;
    return c;
  }
  QParams params() const { return QParams(q, alpha); }
  complex z() const { return {z_re, z_im}; }
};

void attach_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--q", cfg.q, "deformation parameter, 0 < q < 1")
      ->each([&cfg](const std::string&) { cfg.q_set = true; });
  cmd->add_option("--alpha", cfg.alpha, "deformation parameter, -1 < alpha < q")
      ->each([&cfg](const std::string&) { cfg.alpha_set = true; });
  cmd->add_option("--nmax", cfg.n_max, "truncation / matrix order");
  cmd->add_option("--tol", cfg.tol, "series relative tolerance");
  cmd->add_option("--quad-order", cfg.quad_order, "quadrature order");
  cmd->add_option("--atoms-tol", cfg.atoms_tol, "radial measure tail tolerance");
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", cfg.out,
                  "output path (default: QCS_OUT_DIR or stdout)");
}

// A table with named columns; renders to CSV or JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footer;  // comment lines appended to CSV output

  std::string render_csv() const {
    std::ostringstream os;
    for (size_t c = 0; c < columns.size(); ++c)
      os << columns[c] << (c + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows)
      for (size_t c = 0; c < row.size(); ++c)
        os << row[c] << (c + 1 < row.size() ? "," : "\n");
    for (const auto& line : footer) os << "# " << line << "\n";
    return os.str();
  }

  std::string render_json() const {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj;
      for (size_t c = 0; c < columns.size() && c < row.size(); ++c)
        obj[columns[c]] = row[c];
      arr.push_back(obj);
    }
    json top;
    top["rows"] = arr;
    for (const auto& line : footer) top["notes"].push_back(line);
    return top.dump(2) + "\n";
  }
};

void emit(const Table& t, const RunConfig& cfg, const std::string& subject) {
  const std::string body =
      (cfg.format == "json") ? t.render_json() : t.render_csv();
  std::string path = cfg.out;
  if (path.empty()) {
    const char* dir = std::getenv("QCS_OUT_DIR");
    if (dir && *dir) {
      path = std::string(dir) + "/" + subject + "." +
             (cfg.format == "json" ? "json" : "csv");
    }
  }
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output path: " + path);
  f << body;
}

// ---------------------------------------------------------------- eval ----

Table eval_subject(const std::string& subject, const RunConfig& cfg) {
  Table t;
  const SeriesControl ctrl = cfg.ctrl();
  if (subject == "bracket") {
    t.columns = {"n", "q", "value"};
    t.rows.push_back({std::to_string(cfg.n), fmt(cfg.q),
                      fmt(qcs::q_bracket(cfg.n, cfg.q))});
  } else if (subject == "factorial") {
    t.columns = {"n", "q", "value"};
    t.rows.push_back({std::to_string(cfg.n), fmt(cfg.q),
                      fmt(qcs::q_factorial(cfg.n, cfg.q))});
  } else if (subject == "pochhammer") {
    const complex a(cfg.a_re, cfg.a_im);
    t.columns = {"a_re", "a_im", "q", "n", "value_re", "value_im", "tol"};
    const complex v = cfg.poch_inf
                          ? qcs::q_pochhammer_inf(a, cfg.q, ctrl)
                          : qcs::q_pochhammer(a, cfg.q, cfg.n);
    t.rows.push_back({fmt(cfg.a_re), fmt(cfg.a_im), fmt(cfg.q),
                      cfg.poch_inf ? "inf" : std::to_string(cfg.n),
                      fmt(v.real()), fmt(v.imag()), fmt(cfg.tol)});
  } else if (subject == "qexp") {
    const complex xi(cfg.xi_re, cfg.xi_im);
    const complex v = qcs::q_exp(xi, cfg.q, ctrl);
    t.columns = {"xi_re", "xi_im", "q", "value_re", "value_im", "tol"};
    t.rows.push_back({fmt(cfg.xi_re), fmt(cfg.xi_im), fmt(cfg.q),
                      fmt(v.real()), fmt(v.imag()), fmt(cfg.tol)});
  } else if (subject == "phi") {
    const QParams p = cfg.params();
    const double x = cfg.x_set ? cfg.x : ThetaPoint::from_theta(cfg.theta, p).x;
    const qcs::PolySequence seq = qcs::basis_phi(cfg.n, x, p);
    t.columns = {"n", "x", "value"};
    for (int k = 0; k <= cfg.n; ++k)
      t.rows.push_back({std::to_string(k), fmt(x), fmt(seq[k])});
  } else if (subject == "asc") {
    const QParams p = cfg.params();
    const double x = cfg.x_set ? cfg.x : ThetaPoint::from_theta(cfg.theta, p).x;
    const qcs::PolySequence seq = qcs::asc_eval_sym(cfg.n, x, p);
    t.columns = {"n", "x", "value"};
    for (int k = 0; k <= cfg.n; ++k)
      t.rows.push_back({std::to_string(k), fmt(x), fmt(seq[k])});
  } else if (subject == "kernel") {
    const QParams p = cfg.params();
    const ThetaPoint pt = ThetaPoint::from_theta(cfg.theta, p);
    const complex v = qcs::kernel_eval(cfg.z(), pt, p, ctrl);
    t.columns = {"z_re", "z_im", "theta", "value_re", "value_im", "tol"};
    t.rows.push_back({fmt(cfg.z_re), fmt(cfg.z_im), fmt(cfg.theta),
                      fmt(v.real()), fmt(v.imag()), fmt(cfg.tol)});
  } else if (subject == "normalization") {
    const QParams p = cfg.params();
    const double v = qcs::normalization(cfg.r2, p, ctrl);
    t.columns = {"r2", "q", "alpha", "value", "tol"};
    t.rows.push_back(
        {fmt(cfg.r2), fmt(cfg.q), fmt(cfg.alpha), fmt(v), fmt(cfg.tol)});
  } else if (subject == "wavefunction") {
    const QParams p = cfg.params();
    const ThetaPoint pt = cfg.x_set ? ThetaPoint::from_x(cfg.x, p)
                                    : ThetaPoint::from_theta(cfg.theta, p);
    const complex closed = qcs::wavefunction_closed(cfg.z(), pt, p, ctrl);
    double tail = 0.0;
    const complex series = qcs::wavefunction_series(cfg.z(), pt.x, p, -1, &tail);
    t.columns = {"z_re",      "z_im",      "x",          "closed_re",
                 "closed_im", "series_re", "series_im",  "route_diff",
                 "tol"};
    t.rows.push_back({fmt(cfg.z_re), fmt(cfg.z_im), fmt(pt.x),
                      fmt(closed.real()), fmt(closed.imag()),
                      fmt(series.real()), fmt(series.imag()),
                      fmt(std::abs(closed - series)),
                      fmt(std::max(tail, cfg.tol))});
  } else if (subject == "weight") {
    const QParams p = cfg.params();
    const ThetaPoint pt = cfg.x_set ? ThetaPoint::from_x(cfg.x, p)
                                    : ThetaPoint::from_theta(cfg.theta, p);
    t.columns = {"x", "theta", "omega", "tol"};
    t.rows.push_back({fmt(pt.x), fmt(pt.theta),
                      fmt(qcs::weight_omega(pt, p, ctrl)), fmt(cfg.tol)});
  } else {
    throw CLI::ValidationError("eval: unknown subject '" + subject + "'");
  }
  return t;
}

// -------------------------------------------------------------- verify ----

struct CheckRow {
  std::string check;
  double q;
  double alpha;
  double residual;
  double threshold;
  bool pass() const { return residual <= threshold; }
};

std::vector<std::pair<double, double>> param_grid(const RunConfig& cfg,
                                                  bool alpha_zero_only = false) {
  if (cfg.q_set || cfg.alpha_set)
    return {{cfg.q, alpha_zero_only ? 0.0 : cfg.alpha}};
  std::vector<std::pair<double, double>> grid;
  for (double q : {0.3, 0.5, 0.8}) {
    if (alpha_zero_only) {
      grid.push_back({q, 0.0});
      continue;
    }
    for (double alpha : {-0.5, 0.0, 0.25}) grid.push_back({q, alpha});
  }
  return grid;
}

std::vector<CheckRow> verify_moments(const RunConfig& cfg) {
  std::vector<CheckRow> rows;
  for (const auto& [q, alpha] : param_grid(cfg)) {
    const QParams p(q, alpha);
    const auto meas = qcs::radial_measure(p, cfg.atoms_tol, 12);
    double worst = 0.0;
    for (int n = 0; n <= 12; ++n) {
      const double want = qcs::x_factorial(n, p);
      worst = std::max(worst,
                       std::abs(qcs::radial_moment(meas, n) - want) / want);
    }
    rows.push_back({"moment_identity", q, alpha, worst, 1e-8});
  }
  return rows;
}

std::vector<CheckRow> verify_gram(const RunConfig& cfg) {
  std::vector<CheckRow> rows;
  for (const auto& [q, alpha] : param_grid(cfg)) {
    const QParams p(q, alpha);
    const auto quad = qcs::make_quadrature(p, cfg.quad_order, cfg.ctrl());
    std::vector<std::vector<double>> phis;
    phis.reserve(quad.nodes.size());
    const int top = std::min(cfg.n_max, 10);
    for (const auto& node : quad.nodes)
      phis.push_back(qcs::basis_phi(top, node.x, p).values);
    double worst = 0.0;
    for (int m = 0; m <= top; ++m)
      for (int n = m; n <= top; ++n) {
        qcs::detail::KahanSum acc;
        for (size_t i = 0; i < quad.nodes.size(); ++i)
          acc.add(phis[i][static_cast<size_t>(m)] *
                  phis[i][static_cast<size_t>(n)] * quad.nodes[i].weight);
        worst = std::max(worst, std::abs(acc.value() - (m == n ? 1.0 : 0.0)));
      }
    rows.push_back({"gram_identity", q, alpha, worst, 1e-7});
  }
  return rows;
}

std::vector<CheckRow> verify_genfun(const RunConfig& cfg) {
  std::vector<CheckRow> rows;
  for (const auto& [q, alpha] : param_grid(cfg)) {
    const QParams p(q, alpha);
    double worst = 0.0;
    for (double zmod : {0.3, 0.6, 0.9}) {
      for (double zarg : {0.0, 2.1, -1.2}) {
        const complex z = zmod * p.disk_radius * std::polar(1.0, zarg);
        for (double theta : {0.6, 1.5, 2.5}) {
          const ThetaPoint pt = ThetaPoint::from_theta(theta, p);
          const complex series = qcs::wavefunction_series(z, pt.x, p);
          const complex closed = qcs::wavefunction_closed(z, pt, p, cfg.ctrl());
          worst = std::max(worst, std::abs(series - closed));
        }
      }
    }
    rows.push_back({"generating_function", q, alpha, worst, 1e-9});
  }
  return rows;
}

std::vector<CheckRow> verify_kernel(const RunConfig& cfg) {
  std::vector<CheckRow> rows;
  for (const auto& [q, alpha] : param_grid(cfg)) {
    const QParams p(q, alpha);
    double worst_series = 0.0, worst_diag = 0.0;
    for (double zmod : {0.4, 0.7}) {
      const complex z = zmod * p.disk_radius * std::polar(1.0, 0.9);
      const complex w = 0.65 * p.disk_radius * std::polar(1.0, -2.0);
      qcs::detail::KahanSumC series;
      complex term = 1.0;
      int j = 0;
      while (std::abs(term) > 1e-18 && j < 4000) {
        series.add(term);
        ++j;
        term *= z * std::conj(w) / qcs::x_seq(j, p);
      }
      const complex v = qcs::reproducing_kernel(z, w, p, cfg.ctrl());
      worst_series =
          std::max(worst_series, std::abs(v - series.value()) / std::abs(v));
      const double nz = qcs::normalization(std::norm(z), p, cfg.ctrl());
      const complex kzz = qcs::reproducing_kernel(z, z, p, cfg.ctrl());
      worst_diag = std::max(worst_diag, std::abs(kzz - nz) / nz);
    }
    rows.push_back({"kernel_series_route", q, alpha, worst_series, 1e-10});
    rows.push_back({"kernel_diagonal", q, alpha, worst_diag, 1e-13});
  }
  return rows;
}

std::vector<CheckRow> verify_isometry(const RunConfig& cfg) {
  std::vector<CheckRow> rows;
  for (const auto& [q, alpha] : param_grid(cfg)) {
    const QParams p(q, alpha);
    const auto meas = qcs::radial_measure(p, cfg.atoms_tol, 20);
    const auto quad = qcs::make_quadrature(p, cfg.quad_order, cfg.ctrl());
    const complex z = 0.55 * p.disk_radius * std::polar(1.0, 0.9);
    double worst_map = 0.0;
    for (int n = 0; n <= 8; ++n) {
      const complex bn =
          qcs::transform(qcs::FockVector::basis(n, 8), z, p, quad, cfg.ctrl());
      const complex want = std::pow(z, n) / std::sqrt(qcs::x_factorial(n, p));
      worst_map = std::max(worst_map, std::abs(bn - want));
    }
    rows.push_back({"basis_mapping", q, alpha, worst_map, 1e-7});

    const auto gram = qcs::isometry_gram(9, p, meas, quad, cfg.ctrl());
    double worst = 0.0;
    for (int m = 0; m < 9; ++m)
      for (int n = 0; n < 9; ++n)
        worst = std::max(
            worst,
            std::abs(gram[static_cast<size_t>(m)][static_cast<size_t>(n)] -
                     complex(m == n ? 1.0 : 0.0)));
    rows.push_back({"transform_gram", q, alpha, worst, 1e-7});
  }
  return rows;
}

std::vector<CheckRow> verify_corollary(const RunConfig& cfg) {
  std::vector<CheckRow> rows;
  for (const auto& [q, alpha] : param_grid(cfg)) {
    const QParams p(q, alpha);
    const auto meas = qcs::radial_measure(p, cfg.atoms_tol, 12);
    double worst = 0.0;
    for (double theta : {M_PI / 5.0, M_PI / 3.0, 2.2}) {
      const ThetaPoint pt = ThetaPoint::from_theta(theta, p);
      const qcs::PolySequence rec = qcs::asc_eval_sym(6, pt.x, p);
      for (int n = 0; n <= 6; ++n) {
        const double got =
            qcs::asc_integral_representation(n, pt, p, meas, cfg.ctrl());
        worst = std::max(worst, std::abs(got - rec[n]));
      }
    }
    rows.push_back({"integral_representation", q, alpha, worst, 1e-6});
  }
  return rows;
}

std::vector<CheckRow> verify_alpha0(const RunConfig& cfg) {
  std::vector<CheckRow> rows;
  for (const auto& [q, alpha] : param_grid(cfg, /*alpha_zero_only=*/true)) {
    (void)alpha;
    const QParams p(q, 0.0);
    const auto rep = qcs::arik_coon_reduction_report(p, cfg.ctrl());
    rows.push_back({"atoms_vs_arik_coon", q, 0.0, rep.atom_residual, 1e-11});
    rows.push_back({"phi_vs_q_hermite", q, 0.0, rep.phi_residual, 1e-11});
    rows.push_back({"normalization_vs_qexp", q, 0.0, rep.norm_residual, 1e-11});

    // kernel collapse to the double Pochhammer product
    double worst = 0.0;
    const complex z = 0.7 * p.disk_radius * std::polar(1.0, -0.8);
    for (double theta : {0.7, 1.9}) {
      const complex u = std::polar(1.0, theta);
      const complex t = z * std::sqrt(1.0 - q);
      const complex want = 1.0 / (qcs::q_pochhammer_inf(t / u, q, cfg.ctrl()) *
                                  qcs::q_pochhammer_inf(t * u, q, cfg.ctrl()));
      const complex got =
          qcs::kernel_eval(z, ThetaPoint::from_theta(theta, p), p, cfg.ctrl());
      worst = std::max(worst, std::abs(got - want) / std::abs(want));
    }
    rows.push_back({"kernel_vs_double_pochhammer", q, 0.0, worst, 1e-11});
  }
  return rows;
}

std::vector<CheckRow> verify_qlimit(const RunConfig& cfg) {
  std::vector<CheckRow> rows;
  const std::vector<double> qs{0.9, 0.99, 0.999};
  const auto sweep = qcs::limit_sweep_q_to_1(
      cfg.nu, cfg.z(), cfg.x_set ? cfg.x : 0.2, qs, cfg.ctrl());
  const bool decreasing =
      sweep[1].error < sweep[0].error && sweep[2].error < sweep[1].error;
  rows.push_back(
      {"sweep_monotone_decrease", 0.999, 0.0, decreasing ? 0.0 : 1.0, 0.5});
  rows.push_back({"sweep_final_error", 0.999, 0.0, sweep[2].error, 1e-2});

  const double q = 0.999;
  const QParams p(q, -std::pow(q, 2.0 * cfg.nu));
  double worst = 0.0;
  double factorial = 1.0, rising = 1.0;
  for (int n = 0; n <= 4; ++n) {
    if (n > 0) {
      factorial *= n;
      rising *= (2.0 * cfg.nu + n - 1.0);
    }
    const double lhs = std::pow(1.0 - q, n) / qcs::x_factorial(n, p);
    const double rhs = 1.0 / (factorial * rising);
    worst = std::max(worst, std::abs(lhs / rhs - 1.0));
  }
  rows.push_back({"coefficient_limit", q, p.alpha, worst, 1e-2});
  return rows;
}

int run_verify(const std::string& suite, const RunConfig& cfg) {
  std::vector<CheckRow> rows;
  const auto append = [&rows](std::vector<CheckRow> more) {
    rows.insert(rows.end(), more.begin(), more.end());
  };
  bool known = false;
  if (suite == "moments" || suite == "all") known = true, append(verify_moments(cfg));
  if (suite == "gram" || suite == "all") known = true, append(verify_gram(cfg));
  if (suite == "genfun" || suite == "all") known = true, append(verify_genfun(cfg));
  if (suite == "kernel" || suite == "all") known = true, append(verify_kernel(cfg));
  if (suite == "isometry" || suite == "all") known = true, append(verify_isometry(cfg));
  if (suite == "corollary" || suite == "all") known = true, append(verify_corollary(cfg));
  if (suite == "alpha0" || suite == "all") known = true, append(verify_alpha0(cfg));
  if (suite == "qlimit" || suite == "all") known = true, append(verify_qlimit(cfg));
  if (!known)
    throw CLI::ValidationError("verify: unknown suite '" + suite + "'");

  Table t;
  t.columns = {"check", "q", "alpha", "max_residual", "threshold", "pass"};
  bool all_pass = true;
  for (const auto& r : rows) {
    all_pass = all_pass && r.pass();
    t.rows.push_back({r.check, fmt(r.q), fmt(r.alpha), fmt(r.residual),
                      fmt(r.threshold), r.pass() ? "1" : "0"});
  }
  t.footer.push_back(std::string("suite ") + suite + ": " +
                     (all_pass ? "pass" : "FAIL"));
  emit(t, cfg, "verify_" + suite);
  return all_pass ? 0 : 1;
}

// -------------------------------------------------------------- export ----

Table export_subject(const std::string& subject, const RunConfig& cfg) {
  Table t;
  if (subject == "atoms") {
    const QParams p = cfg.params();
    const auto meas = qcs::radial_measure(p, cfg.atoms_tol, 20, cfg.ctrl());
    t.columns = {"index", "radius", "weight"};
    qcs::detail::KahanSum mass;
    for (size_t k = 0; k < meas.atoms.size(); ++k) {
      t.rows.push_back({std::to_string(k), fmt(meas.atoms[k].radius),
                        fmt(meas.atoms[k].weight)});
      mass.add(meas.atoms[k].weight);
    }
    t.footer.push_back("sum_weight," + fmt(mass.value()));
    t.footer.push_back("tail_bound," + fmt(meas.tail_bound));
  } else if (subject == "quadrature") {
    const QParams p = cfg.params();
    const auto quad = qcs::make_quadrature(p, cfg.quad_order, cfg.ctrl());
    t.columns = {"index", "theta", "x", "weight"};
    for (size_t i = 0; i < quad.nodes.size(); ++i)
      t.rows.push_back({std::to_string(i), fmt(quad.nodes[i].theta),
                        fmt(quad.nodes[i].x), fmt(quad.nodes[i].weight)});
  } else if (subject == "weight-curve") {
    const QParams p = cfg.params();
    t.columns = {"x", "omega"};
    const int npts = 401;
    for (int i = 1; i < npts; ++i) {
      const double theta = M_PI * i / npts;
      const ThetaPoint pt = ThetaPoint::from_theta(theta, p);
      t.rows.push_back({fmt(pt.x), fmt(qcs::weight_omega(pt, p, cfg.ctrl()))});
    }
  } else if (subject == "wavefunction-grid") {
    const QParams p = cfg.params();
    t.columns = {"x", "value_re", "value_im"};
    const int npts = 101;
    for (int i = 1; i < npts; ++i) {
      const double theta = M_PI * i / npts;
      const ThetaPoint pt = ThetaPoint::from_theta(theta, p);
      const complex v = qcs::wavefunction_closed(cfg.z(), pt, p, cfg.ctrl());
      t.rows.push_back({fmt(pt.x), fmt(v.real()), fmt(v.imag())});
    }
  } else if (subject == "sweep") {
    const std::vector<double> qs{0.9, 0.99, 0.999};
    const auto sweep = qcs::limit_sweep_q_to_1(
        cfg.nu, cfg.z(), cfg.x_set ? cfg.x : 0.2, qs, cfg.ctrl());
    t.columns = {"q", "error"};
    for (const auto& pt : sweep) t.rows.push_back({fmt(pt.q), fmt(pt.error)});
  } else {
    throw CLI::ValidationError("export: unknown subject '" + subject + "'");
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "q-deformed coherent states toolkit: q-series primitives,\n"
      "Al-Salam-Chihara bases, radial measures, Bargmann-type transforms.\n"
      "CSV output columns are named in the header row of each table."};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string eval_subject_name;
  CLI::App* eval = app.add_subcommand(
      "eval",
      "evaluate one quantity; subjects: bracket, factorial, pochhammer,\n"
      "qexp, phi, asc, kernel, normalization, wavefunction, weight");
  eval->add_option("subject", eval_subject_name, "what to evaluate")
      ->required();
  attach_common(eval, cfg);
  eval->add_option("--n", cfg.n, "index / degree");
  eval->add_option("--x", cfg.x, "position on the support interval")
      ->each([&cfg](const std::string&) { cfg.x_set = true; });
  eval->add_option("--theta", cfg.theta, "angle parametrization of x");
  eval->add_option("--r2", cfg.r2, "squared label radius");
  eval->add_option("--z-re", cfg.z_re, "label real part");
  eval->add_option("--z-im", cfg.z_im, "label imaginary part");
  eval->add_option("--a-re", cfg.a_re, "Pochhammer argument real part");
  eval->add_option("--a-im", cfg.a_im, "Pochhammer argument imaginary part");
  eval->add_option("--xi-re", cfg.xi_re, "q-exponential argument real part");
  eval->add_option("--xi-im", cfg.xi_im,
                   "q-exponential argument imaginary part");
  eval->add_flag("--inf", cfg.poch_inf, "infinite Pochhammer product");

  std::string verify_suite_name;
  CLI::App* verify = app.add_subcommand(
      "verify",
      "run an invariant suite over the default parameter grid; suites:\n"
      "moments, gram, genfun, kernel, isometry, corollary, alpha0, qlimit, all");
  verify->add_option("suite", verify_suite_name, "which suite")->required();
  attach_common(verify, cfg);
  verify->add_option("--nu", cfg.nu, "limit family parameter");
  verify->add_option("--z-re", cfg.z_re, "sweep label real part");
  verify->add_option("--z-im", cfg.z_im, "sweep label imaginary part");
  verify->add_option("--x", cfg.x, "sweep position argument")
      ->each([&cfg](const std::string&) { cfg.x_set = true; });

  std::string export_subject_name;
  CLI::App* exp = app.add_subcommand(
      "export",
      "write plot-ready tables; subjects: atoms, quadrature, weight-curve,\n"
      "wavefunction-grid, sweep");
  exp->add_option("subject", export_subject_name, "what to export")
      ->required();
  attach_common(exp, cfg);
  exp->add_option("--nu", cfg.nu, "limit family parameter");
  exp->add_option("--x", cfg.x, "sweep position argument")
      ->each([&cfg](const std::string&) { cfg.x_set = true; });
  exp->add_option("--z-re", cfg.z_re, "label real part");
  exp->add_option("--z-im", cfg.z_im, "label imaginary part");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) {
      emit(eval_subject(eval_subject_name, cfg), cfg,
           "eval_" + eval_subject_name);
      return 0;
    }
    if (verify->parsed()) return run_verify(verify_suite_name, cfg);
    if (exp->parsed()) {
      emit(export_subject(export_subject_name, cfg), cfg, export_subject_name);
      return 0;
    }
  } catch (const qcs::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const qcs::pole_error& e) {
    std::cerr << "pole error: " << e.what() << "\n";
    return 3;
  } catch (const qcs::convergence_error& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
