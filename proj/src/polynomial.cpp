#include "hitchinlab/polynomial.hpp"

namespace hlab {

std::vector<std::complex<double>> roots_durand_kerner(const std::vector<double>& coeffs) {
  int deg = int(coeffs.size()) - 1;
  while (deg > 0 && coeffs[deg] == 0) --deg;
  if (deg <= 0) return {};
  std::vector<std::complex<double>> a(coeffs.begin(), coeffs.begin() + deg + 1);
  for (auto& v : a) v /= a[deg];
  std::vector<std::complex<double>> z(deg);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> p(1, 0);
  for (int i = 0; i < deg; ++i) {
    p *= seed;
    z[i] = p;
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (int i = deg; i >= 0; --i) acc = acc * x + a[i];
    return acc;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0;
    for (int i = 0; i < deg; ++i) {
      std::complex<double> den(1, 0);
      for (int j = 0; j < deg; ++j)
        if (j != i) den *= z[i] - z[j];
      std::complex<double> d = eval(z[i]) / den;
      z[i] -= d;
      shift = std::max(shift, std::abs(d));
    }
    if (shift < 1e-14) break;
  }
  return z;
}

std::vector<double> real_roots(const std::vector<double>& coeffs, double imag_tol) {
  double scale = 0;
  for (double c : coeffs) scale = std::max(scale, std::fabs(c));
  if (scale == 0) return {};
  auto z = roots_durand_kerner(coeffs);
  std::vector<double> out;
  for (auto& r : z)
    if (std::fabs(r.imag()) < imag_tol * (1 + std::fabs(r.real()))) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hlab
