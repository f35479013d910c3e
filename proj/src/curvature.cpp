#include "hitchinlab/curvature.hpp"

#include <cmath>
#include <future>

namespace hlab {

Matrix<double> h3h3_coframe(const std::vector<double>& p) {
  Matrix<double> c(6, 6);
  for (int i = 0; i < 6; ++i) c(i, i) = 1;
  c(2, 1) = p[0];  // e^3 = dx3 + x1 dx2
  c(5, 4) = p[3];  // f^3 = dy3 + y1 dy2
  return c;
}

ChartMetric chart_from_pair(const Matrix<double>& g_frame) {
  ChartMetric cm;
  cm.dim = 6;
  cm.chart_info = "h3h3 coframe, fixed left-invariant metric";
  cm.eval = [g_frame](const std::vector<double>& p) {
    Matrix<double> c = h3h3_coframe(p);
    return c.transposed() * g_frame * c;
  };
  return cm;
}

namespace {

// float evaluation of the kappa-family frame metric g(x) (no square roots)
Matrix<double> kappa_metric6_float(const KappaSolution<Quad>& ks, double x) {
  KForm<double> rho = to_float(rho1_family(ks.a));
  KForm<double> delta = to_float(ks.delta);
  for (size_t i = 0; i < rho.c.size(); ++i) rho.c[i] += x * delta.c[i];
  Matrix<double> K = k_endomorphism(rho);
  double kap = 0;
  for (int i = int(ks.kappa.c.size()) - 1; i >= 0; --i)
    kap = kap * x + to_double(ks.kappa.c[size_t(i)]);
  KForm<double> wa(6, 2), wb(6, 2);
  wa.at_mask(0b001001) = 1;
  wa.at_mask(0b010010) = 1;
  wb.at_mask(0b100100) = 1;
  Matrix<double> g = (two_form_matrix(wa) * K) * (-0.5 * ks.epsilon) +
                     (two_form_matrix(wb) * K) * (-2.0 / kap);
  return g;
}

double kappa_eval_float(const KappaSolution<Quad>& ks, double x) {
  double kap = 0;
  for (int i = int(ks.kappa.c.size()) - 1; i >= 0; --i)
    kap = kap * x + to_double(ks.kappa.c[size_t(i)]);
  return kap;
}

}  // namespace

ChartMetric chart_from_kappa(const KappaSolution<Quad>& ks) {
  ChartMetric cm;
  cm.dim = 7;
  cm.chart_info = "h3h3 coframe + family coordinate x, g = g(x) - kappa/4 dx^2";
  KappaSolution<Quad> copy = ks;
  cm.eval = [copy](const std::vector<double>& p) {
    double x = p[6];
    if (std::isfinite(copy.xm) && x <= copy.xm)
      fail(Err::OutsideInterval, "chart_from_kappa: x outside the interval");
    if (std::isfinite(copy.xp) && x >= copy.xp)
      fail(Err::OutsideInterval, "chart_from_kappa: x outside the interval");
    Matrix<double> g6 = kappa_metric6_float(copy, x);
    Matrix<double> c = h3h3_coframe(p);
    Matrix<double> gchart = c.transposed() * g6 * c;
    Matrix<double> g(7, 7);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) g(i, j) = gchart(i, j);
    g(6, 6) = -kappa_eval_float(copy, x) / 4;
    return g;
  };
  return cm;
}

Diffeo tanh_diffeo(double a, double b) {
  double mid = (a + b) / 2, half = (b - a) / 2;
  return Diffeo{[mid, half](double r) { return mid + half * std::tanh(r); },
                [half](double r) {
                  double c = std::cosh(r);
                  return half / (c * c);
                }};
}

ChartMetric conformal_complete(const std::function<Matrix<double>(double)>& g_of_param, int dim,
                               const Diffeo& diffeo) {
  for (double r : {-3.0, -1.0, 0.0, 1.0, 3.0})
    if (!(diffeo.deriv(r) > 0)) fail(Err::NotADiffeo, "conformal_complete: derivative not positive");
  ChartMetric cm;
  cm.dim = dim + 1;
  cm.chart_info = "dr^2 + f'(r)^{-2} g_{f(r)}, h3h3 coframe, r last";
  cm.eval = [g_of_param, dim, diffeo](const std::vector<double>& p) {
    double r = p[size_t(dim)];
    double fp = diffeo.deriv(r);
    if (!(fp > 0)) fail(Err::NotADiffeo, "conformal_complete: derivative not positive");
    Matrix<double> gf = g_of_param(diffeo.value(r));
    Matrix<double> c = h3h3_coframe(p);
    Matrix<double> gchart = c.transposed() * gf * c;
    Matrix<double> g(dim + 1, dim + 1);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) g(i, j) = gchart(i, j) / (fp * fp);
    g(dim, dim) = 1;
    return g;
  };
  return cm;
}

namespace {

using Grid3 = std::vector<std::vector<std::vector<double>>>;  // [i][j][k]

Grid3 christoffel(const ChartMetric& cm, const std::vector<double>& p, double h) {
  int n = cm.dim;
  // dg[k](i,j) = d g_ij / d x_k, Richardson-extrapolated central differences
  std::vector<Matrix<double>> dg;
  dg.resize(size_t(n));
  for (int k = 0; k < n; ++k) {
    auto central = [&](double step) {
      std::vector<double> qp = p, qm = p;
      qp[size_t(k)] += step;
      qm[size_t(k)] -= step;
      Matrix<double> gp = cm.eval(qp), gm = cm.eval(qm);
      Matrix<double> d(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d(i, j) = (gp(i, j) - gm(i, j)) / (2 * step);
      return d;
    };
    Matrix<double> d1 = central(h), d2 = central(h / 2);
    dg[size_t(k)] = d2 * (4.0 / 3.0) - d1 * (1.0 / 3.0);
  }
  Matrix<double> ginv = inverse(cm.eval(p));
  Grid3 gamma(size_t(n), std::vector<std::vector<double>>(size_t(n), std::vector<double>(size_t(n), 0.0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        double s = 0;
        for (int l = 0; l < n; ++l)
          s += ginv(i, l) * (dg[size_t(j)](l, k) + dg[size_t(k)](l, j) - dg[size_t(l)](j, k));
        gamma[size_t(i)][size_t(j)][size_t(k)] = gamma[size_t(i)][size_t(k)][size_t(j)] = s / 2;
      }
  return gamma;
}

struct RiemannData {
  std::vector<double> up;   // R^i_{jkl}
  std::vector<double> low;  // R_{ijkl}
  Matrix<double> g, ginv;
  Grid3 gamma;
  int n = 0;
  double& u(int i, int j, int k, int l) { return up[size_t(((i * n + j) * n + k) * n + l)]; }
  double& lo(int i, int j, int k, int l) { return low[size_t(((i * n + j) * n + k) * n + l)]; }
  double cu(int i, int j, int k, int l) const { return up[size_t(((i * n + j) * n + k) * n + l)]; }
  double clo(int i, int j, int k, int l) const {
    return low[size_t(((i * n + j) * n + k) * n + l)];
  }
};

RiemannData riemann_tensor(const ChartMetric& cm, const std::vector<double>& p,
                           const CurvatureOptions& opt) {
  int n = cm.dim;
  double h = opt.fd_step, H = opt.outer_factor * opt.fd_step;
  RiemannData rd;
  rd.n = n;
  rd.g = cm.eval(p);
  rd.ginv = inverse(rd.g);
  rd.gamma = christoffel(cm, p, h);
  // dGamma[k][i][j][l] = d Gamma^i_{jl} / dx_k, Richardson with the outer step
  std::vector<Grid3> dgamma;
  dgamma.resize(size_t(n));
  for (int k = 0; k < n; ++k) {
    auto central = [&](double step) {
      std::vector<double> qp = p, qm = p;
      qp[size_t(k)] += step;
      qm[size_t(k)] -= step;
      Grid3 gp = christoffel(cm, qp, h), gm = christoffel(cm, qm, h);
      Grid3 d(size_t(n), std::vector<std::vector<double>>(size_t(n), std::vector<double>(size_t(n), 0.0)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l)
            d[size_t(i)][size_t(j)][size_t(l)] =
                (gp[size_t(i)][size_t(j)][size_t(l)] - gm[size_t(i)][size_t(j)][size_t(l)]) /
                (2 * step);
      return d;
    };
    Grid3 d1 = central(H), d2 = central(H / 2);
    dgamma[size_t(k)] = d1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          dgamma[size_t(k)][size_t(i)][size_t(j)][size_t(l)] =
              (4 * d2[size_t(i)][size_t(j)][size_t(l)] - d1[size_t(i)][size_t(j)][size_t(l)]) / 3;
  }
  rd.up.assign(size_t(n) * n * n * n, 0.0);
  rd.low.assign(size_t(n) * n * n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v = dgamma[size_t(k)][size_t(i)][size_t(l)][size_t(j)] -
                     dgamma[size_t(l)][size_t(i)][size_t(k)][size_t(j)];
          for (int m = 0; m < n; ++m)
            v += rd.gamma[size_t(i)][size_t(k)][size_t(m)] * rd.gamma[size_t(m)][size_t(l)][size_t(j)] -
                 rd.gamma[size_t(i)][size_t(l)][size_t(m)] * rd.gamma[size_t(m)][size_t(k)][size_t(j)];
          rd.u(i, j, k, l) = v;
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v = 0;
          for (int m = 0; m < n; ++m) v += rd.g(i, m) * rd.cu(m, j, k, l);
          rd.lo(i, j, k, l) = v;
        }
  return rd;
}

}  // namespace

CurvatureReport riemann(const ChartMetric& cm, const std::vector<double>& p,
                        const CurvatureOptions& opt) {
  int n = cm.dim;
  CurvatureReport rep;
  rep.point = p;
  RiemannData rd = riemann_tensor(cm, p, opt);

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  int N = int(pairs.size());
  rep.op = Matrix<double>(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      rep.op(a, b) = rd.clo(pairs[size_t(a)].first, pairs[size_t(a)].second,
                            pairs[size_t(b)].first, pairs[size_t(b)].second);
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      double s = (rep.op(a, b) + rep.op(b, a)) / 2;
      rep.op(a, b) = rep.op(b, a) = s;
    }
  rep.svals = eigenvalues_sym(rep.op);
  for (auto& v : rep.svals) v = std::fabs(v);

  double rmax = 0;
  for (double v : rd.low) rmax = std::max(rmax, std::fabs(v));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          rep.bianchi_residual =
              std::max(rep.bianchi_residual,
                       std::fabs(rd.clo(i, j, k, l) + rd.clo(i, k, l, j) + rd.clo(i, l, j, k)));
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      double s = 0;
      for (int i = 0; i < n; ++i) s += rd.cu(i, j, i, l);
      rep.ricci_norm = std::max(rep.ricci_norm, std::fabs(s));
    }

  if (rmax < opt.flat_tol) {
    rep.op_rank = 0;
    rep.gap_ratio = std::numeric_limits<double>::infinity();
    rep.verdict = "Flat";
  } else {
    double scale = rep.svals[0];
    int best_pos = -1;
    double best_ratio = 0;
    for (int i = 0; i + 1 < N; ++i) {
      double lo = std::max(rep.svals[size_t(i) + 1], 1e-300);
      double ratio = rep.svals[size_t(i)] / lo;
      if (rep.svals[size_t(i)] >= 1e-12 * scale && ratio > best_ratio)
        best_ratio = ratio, best_pos = i;
    }
    rep.gap_ratio = best_ratio;
    if (best_ratio >= opt.sv_gap)
      rep.op_rank = best_pos + 1;
    else if (best_ratio < opt.ill_gap)
      fail(Err::IllConditioned, "riemann: no usable singular-value gap");
    else
      rep.op_rank = -1;
  }

  if (opt.want_nabla_r && rep.verdict != "Flat") {
    double H = opt.nabla_step;
    double worst = 0;
    for (int m = 0; m < n; ++m) {
      auto dR = [&](double step) {
        std::vector<double> qp = p, qm = p;
        qp[size_t(m)] += step;
        qm[size_t(m)] -= step;
        RiemannData rp = riemann_tensor(cm, qp, opt), rmd = riemann_tensor(cm, qm, opt);
        std::vector<double> d(rp.low.size());
        for (size_t q = 0; q < d.size(); ++q) d[q] = (rp.low[q] - rmd.low[q]) / (2 * step);
        return d;
      };
      std::vector<double> d1 = dR(H), d2 = dR(H / 2);
      for (size_t q = 0; q < d1.size(); ++q) d1[q] = (4 * d2[q] - d1[q]) / 3;
      auto dlo = [&](int i, int j, int k, int l) {
        return d1[size_t(((i * n + j) * n + k) * n + l)];
      };
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              double v = dlo(i, j, k, l);
              for (int a = 0; a < n; ++a) {
                v -= rd.gamma[size_t(a)][size_t(m)][size_t(i)] * rd.clo(a, j, k, l);
                v -= rd.gamma[size_t(a)][size_t(m)][size_t(j)] * rd.clo(i, a, k, l);
                v -= rd.gamma[size_t(a)][size_t(m)][size_t(k)] * rd.clo(i, j, a, l);
                v -= rd.gamma[size_t(a)][size_t(m)][size_t(l)] * rd.clo(i, j, k, a);
              }
              worst = std::max(worst, std::fabs(v));
            }
    }
    rep.parallel_residual = worst;
  }

  if (rep.verdict.empty()) {
    if (rep.op_rank == 1 && rep.parallel_residual < opt.nabla_tol &&
        rep.ricci_norm < opt.ricci_tol)
      rep.verdict = "SymmetricRank1";
    else if (n == 7 && rep.op_rank == 14 && rep.ricci_norm < opt.ricci_tol)
      rep.verdict = "HolonomyFullG2kind";
    else
      rep.verdict = "Inconclusive";
  }
  return rep;
}

std::string certify(const ChartMetric& cm, const std::vector<std::vector<double>>& points,
                    const CurvatureOptions& opt, std::vector<CurvatureReport>* reports) {
  std::vector<std::future<CurvatureReport>> jobs;
  jobs.reserve(points.size());
  for (const auto& p : points)
    jobs.push_back(std::async(std::launch::async, [&cm, p, &opt] { return riemann(cm, p, opt); }));
  std::vector<CurvatureReport> reps;
  reps.reserve(points.size());
  for (auto& j : jobs) reps.push_back(j.get());
  std::string verdict = reps.empty() ? "Inconclusive" : reps.front().verdict;
  for (const auto& r : reps)
    if (r.verdict != verdict) verdict = "Inconclusive";
  if (reports) *reports = std::move(reps);
  return verdict;
}

std::vector<std::vector<double>> sample_points(int dim, int count, double offset) {
  std::vector<std::vector<double>> out;
  for (int k = 0; k < count; ++k) {
    std::vector<double> p(size_t(dim), 0.0);
    for (int i = 0; i < dim; ++i) {
      double t = 0.37 * (k + 1) * (i + 2);
      p[size_t(i)] = offset + 0.13 * (t - std::floor(t));
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace hlab
