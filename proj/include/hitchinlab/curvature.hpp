// Coordinate-chart metrics for the H3 x H3 constructions and numerical
// curvature: Christoffel symbols by Richardson-extrapolated central
// differences, the Riemann tensor, the curvature operator on two-vectors and
// its rank, Ricci, nabla R residuals, and the holonomy verdicts built on them.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hitchinlab/flow.hpp"

namespace hlab {

// Smooth map coords -> symmetric metric matrix.
struct ChartMetric {
  int dim = 6;
  std::function<Matrix<double>(const std::vector<double>&)> eval;
  std::string chart_info;
};

// Left-invariant coframe substitution e^3 = dx3 + x1 dx2, f^3 = dy3 + y1 dy2;
// coordinates ordered (x1, x2, x3, y1, y2, y3).
Matrix<double> h3h3_coframe(const std::vector<double>& p);

// Six-dimensional chart metric of a fixed pair on H3 x H3.
ChartMetric chart_from_pair(const Matrix<double>& g_frame);

// Seven-dimensional chart metric of a kappa family: coordinates
// (x1, x2, x3, y1, y2, y3, x) with g = g(x) - kappa(x)/4 dx^2.
ChartMetric chart_from_kappa(const KappaSolution<Quad>& ks);

// Conformal completion dr^2 + f'(r)^{-2} g_{f(r)} of a curve of metrics over
// an interval; diffeo maps R onto the interval.
struct Diffeo {
  std::function<double(double)> value, deriv;
};
// the default scaled tanh map onto (a, b)
Diffeo tanh_diffeo(double a, double b);
ChartMetric conformal_complete(const std::function<Matrix<double>(double)>& g_of_param,
                               int dim, const Diffeo& diffeo);

struct CurvatureOptions {
  double fd_step = 1e-5;        // inner step for the Christoffel differences
  double outer_factor = 100.0;  // outer step = factor * fd_step for dGamma
  double nabla_step = 1e-3;     // step for the nabla R differences (R carries FD noise)
  double tol = 1e-6;           // component tolerance (R-component assertions)
  double flat_tol = 1e-7;      // all |R| below this: flat
  double ricci_tol = 1e-5;
  double nabla_tol = 1e-5;     // parallelism residual
  double sv_gap = 1e3;         // singular-value gap declaring the rank
  double ill_gap = 10.0;       // below this the rank is ill-conditioned
  bool want_nabla_r = true;
};

struct CurvatureReport {
  std::vector<double> point;
  // lowered Riemann tensor R_{ijkl} as the symmetric operator on Lambda^2
  Matrix<double> op;           // N x N, N = dim(dim-1)/2
  std::vector<double> svals;   // |eigenvalues| of op, descending
  int op_rank = -1;            // -1: inconclusive gap
  double gap_ratio = 0;
  double ricci_norm = 0;
  double bianchi_residual = 0;
  double parallel_residual = 0;  // max |nabla R| component
  std::string verdict;           // Flat / SymmetricRank1 / HolonomyFullG2kind / Inconclusive
};

CurvatureReport riemann(const ChartMetric& cm, const std::vector<double>& p,
                        const CurvatureOptions& opt = {});

// Verdict over a sample of points (>= 5 recommended); the per-point reports
// are returned through `reports` when nonnull.
std::string certify(const ChartMetric& cm, const std::vector<std::vector<double>>& points,
                    const CurvatureOptions& opt = {},
                    std::vector<CurvatureReport>* reports = nullptr);

// Generic sample points off the coordinate hyperplanes.
std::vector<std::vector<double>> sample_points(int dim, int count, double offset = 0.37);

}  // namespace hlab
