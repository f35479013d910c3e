#include "hitchinlab/linalg.hpp"

namespace hlab {

void jacobi_sym(Matrix<double>& m, Matrix<double>* vecs) {
  int n = m.rows();
  if (vecs) *vecs = Matrix<double>::identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0, dia = 0;
    for (int p = 0; p < n; ++p) {
      dia += m(p, p) * m(p, p);
      for (int q = p + 1; q < n; ++q) off += m(p, q) * m(p, q);
    }
    if (off <= 1e-28 * (dia + 1e-300)) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = m(p, q);
        if (apq == 0) continue;
        double theta = (m(q, q) - m(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int i = 0; i < n; ++i) {
          double mip = m(i, p), miq = m(i, q);
          m(i, p) = c * mip - s * miq;
          m(i, q) = s * mip + c * miq;
        }
        for (int j = 0; j < n; ++j) {
          double mpj = m(p, j), mqj = m(q, j);
          m(p, j) = c * mpj - s * mqj;
          m(q, j) = s * mpj + c * mqj;
        }
        if (vecs)
          for (int i = 0; i < n; ++i) {
            double vip = (*vecs)(i, p), viq = (*vecs)(i, q);
            (*vecs)(i, p) = c * vip - s * viq;
            (*vecs)(i, q) = s * vip + c * viq;
          }
      }
  }
}

std::vector<double> eigenvalues_sym(Matrix<double> m) {
  jacobi_sym(m, nullptr);
  std::vector<double> ev(m.rows());
  for (int i = 0; i < m.rows(); ++i) ev[i] = m(i, i);
  std::sort(ev.begin(), ev.end(), [](double a, double b) { return std::fabs(a) > std::fabs(b); });
  return ev;
}

Inertia inertia_sym_float(const Matrix<double>& m, double gap) {
  auto ev = eigenvalues_sym(m);
  Inertia out;
  for (double v : ev) {
    if (v > gap)
      ++out.pos;
    else if (v < -gap)
      ++out.neg;
    else
      ++out.zero;
  }
  return out;
}

std::vector<double> solve_lu(Matrix<double> m, std::vector<double> b) {
  int n = m.rows();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (std::fabs(m(i, col)) > std::fabs(m(piv, col))) piv = i;
    if (m(piv, col) == 0) fail(Err::DegenerateMetric, "singular system");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      std::swap(b[piv], b[col]);
    }
    for (int i = col + 1; i < n; ++i) {
      double f = m(i, col) / m(col, col);
      if (f == 0) continue;
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
      b[i] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
    x[i] = s / m(i, i);
  }
  return x;
}

const char* err_name(Err e) {
  switch (e) {
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::DegreeZeroInterior: return "DegreeZeroInterior";
    case Err::NotStable: return "NotStable";
    case Err::NoRealRoot: return "NoRealRoot";
    case Err::Incompatible: return "Incompatible";
    case Err::NotNormalized: return "NotNormalized";
    case Err::NullNormal: return "NullNormal";
    case Err::Degenerate: return "Degenerate";
    case Err::NotCoclosed: return "NotCoclosed";
    case Err::WrongOrbit: return "WrongOrbit";
    case Err::NotClosed: return "NotClosed";
    case Err::SingularHit: return "SingularHit";
    case Err::DriftExceeded: return "DriftExceeded";
    case Err::NotNearlyHalfFlat: return "NotNearlyHalfFlat";
    case Err::NewtonDiverged: return "NewtonDiverged";
    case Err::NotCocalibrated: return "NotCocalibrated";
    case Err::NotNearlyKaehler: return "NotNearlyKaehler";
    case Err::WrongNormalForm: return "WrongNormalForm";
    case Err::OutsideInterval: return "OutsideInterval";
    case Err::IllConditioned: return "IllConditioned";
    case Err::DegenerateRestriction: return "DegenerateRestriction";
    case Err::NotADiffeo: return "NotADiffeo";
    case Err::DegenerateMetric: return "DegenerateMetric";
    case Err::ExactSqrtUnavailable: return "ExactSqrtUnavailable";
  }
  return "Unknown";
}

}  // namespace hlab
