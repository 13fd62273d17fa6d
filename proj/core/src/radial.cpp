#include "ncqm/radial.hpp"

namespace ncqm {

double radial_weight(int j, int nu) {
  // (nu+j+1) * C(nu+2j+1, 2j+1), multiplicative binomial
  double b = 1.0;
  for (int i = 1; i <= 2 * j + 1; ++i) b *= double(nu + i) / double(i);
  return double(nu + j + 1) * b;
}

double weighted_norm_sq(const RadialVector& r) {
  double s = 0.0;
  for (std::size_t nu = 0; nu < r.size(); ++nu)
    s += radial_weight(r.j, static_cast<int>(nu)) * std::norm(r.coeffs[nu]);
  return s;
}

cplx weighted_dot(const RadialVector& a, const RadialVector& b) {
  cplx s = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t nu = 0; nu < n; ++nu)
    s += radial_weight(a.j, static_cast<int>(nu)) * std::conj(a.coeffs[nu]) * b.coeffs[nu];
  return s;
}

}  // namespace ncqm
