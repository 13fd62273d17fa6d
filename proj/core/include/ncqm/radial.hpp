#pragma once

#include <complex>
#include <vector>

namespace ncqm {

using cplx = std::complex<double>;

// Coefficient sequence R(nu) of a fixed-j radial part, nu = 0, 1, ... counting
// from the lowest block the wave function lives on (total quanta n = nu + j).
struct RadialVector {
  int j = 0;
  double lambda = 1.0;
  std::vector<cplx> coeffs;

  std::size_t size() const { return coeffs.size(); }
};

// Weight (nu+j+1) * C(nu+2j+1, 2j+1) of the radial norm sum.
double radial_weight(int j, int nu);

// sum_nu w(nu) |R(nu)|^2, without the 4 pi lambda^(3+2j)/(j!)^2 prefactor.
double weighted_norm_sq(const RadialVector& r);
cplx weighted_dot(const RadialVector& a, const RadialVector& b);

}  // namespace ncqm
