#include "ratsemi/numeric.hpp"

#include <algorithm>
#include <stdexcept>

#include "ratsemi/errors.hpp"

namespace ratsemi::numeric {

namespace {

std::complex<double> eval(const std::vector<std::complex<double>>& c,
                          std::complex<double> x) {
  std::complex<double> v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

}  // namespace

std::vector<std::complex<double>> all_roots(
    std::vector<std::complex<double>> coeffs) {
  while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0)
    coeffs.pop_back();
  if (coeffs.size() <= 1) {
    if (coeffs.empty() || std::abs(coeffs[0]) == 0.0)
      throw precision_error("root finding requires a nonzero polynomial");
    return {};
  }
  const size_t n = coeffs.size() - 1;
  const std::complex<double> lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;
  if (n == 1) return {-coeffs[0]};

  // Cauchy-style inclusion radius for the starting circle.
  double bound = 0.0;
  for (size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(coeffs[i]));
  const double radius = 1.0 + bound;

  // Fixed starting configuration: equally spaced points with an angular
  // offset so no seed lies on a coordinate axis.
  std::vector<std::complex<double>> z(n);
  for (size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2.0 * M_PI * double(k) / double(n) + 0.7);

  const double tol = 1e-13 * radius;
  for (int iter = 0; iter < 400; ++iter) {
    double moved = 0.0;
    for (size_t k = 0; k < n; ++k) {
      std::complex<double> denom = 1.0;
      for (size_t j = 0; j < n; ++j)
        if (j != k) denom *= z[k] - z[j];
      const std::complex<double> step = eval(coeffs, z[k]) / denom;
      z[k] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < tol) break;
  }

  // Newton polish: sharpens simple roots, leaves clustered ones where the
  // all-roots iteration put them.
  std::vector<std::complex<double>> deriv(n);
  for (size_t i = 1; i <= n; ++i) deriv[i - 1] = double(i) * coeffs[i];
  for (auto& r : z) {
    for (int i = 0; i < 3; ++i) {
      const std::complex<double> d = eval(deriv, r);
      if (std::abs(d) == 0.0) break;
      r -= eval(coeffs, r) / d;
    }
  }

  std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

}  // namespace ratsemi::numeric
