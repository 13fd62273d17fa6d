#include "ncqm/scattering.hpp"

#include <cmath>
#include <stdexcept>

#include "ncqm/specfun.hpp"

namespace ncqm::scatter {

cplx momentum_map(cplx energy, double lambda) {
  if (energy.imag() < 0.0) return std::conj(momentum_map(std::conj(energy), lambda));
  const cplx p2 = 2.0 * energy * (1.0 - 0.5 * lambda * lambda * energy);
  if (energy.imag() == 0.0 && p2.real() < 0.0) {
    // E + i0 prescription: p^2 approaches the negative axis from above for
    // E < 1/lambda^2 and from below for E > 1/lambda^2.
    const double mag = std::sqrt(-p2.real());
    const double side = 1.0 / (lambda * lambda) - energy.real() >= 0.0 ? 1.0 : -1.0;
    return {0.0, side * mag};
  }
  return std::sqrt(p2);
}

cplx energy_from_p(cplx p, double lambda) {
  const double il2 = 1.0 / (lambda * lambda);
  return il2 * (1.0 + cplx(0.0, 1.0) * std::sqrt(lambda * lambda * p * p - 1.0));
}

cplx omega_map(cplx energy, double lambda) {
  const cplx p = momentum_map(energy, lambda);
  const cplx den = p + cplx(0.0, 1.0) * lambda * energy;
  if (den == cplx(0.0)) throw std::domain_error("omega_map: singular input");
  return (p - cplx(0.0, 1.0) * lambda * energy) / den;
}

double omega_bound_I(int n, double alpha, double lambda) {
  const double kappa = alpha * lambda / double(n);
  return 1.0 / (std::sqrt(1.0 + kappa * kappa) + std::abs(kappa));
}

double omega_bound_II(int n, double alpha, double lambda) {
  return omega_bound_I(n, alpha, lambda);
}

cplx s_matrix(int j, double energy, double alpha, double lambda) {
  if (!(energy > 0.0) || !(energy < ham::e_crit(lambda)))
    throw std::domain_error("s_matrix: energy must lie inside (0, 2/lambda^2)");
  const cplx p = momentum_map(energy, lambda);
  const cplx ia_over_p = cplx(0.0, 1.0) * alpha / p;
  return std::exp(specfun::log_gamma(cplx(j + 1.0) - ia_over_p) -
                  specfun::log_gamma(cplx(j + 1.0) + ia_over_p));
}

cplx s_matrix_standard(int j, double energy, double alpha) {
  if (!(energy > 0.0)) throw std::domain_error("s_matrix_standard: energy must be positive");
  const double k = std::sqrt(2.0 * energy);
  const cplx ia_over_k = cplx(0.0, alpha / k);
  return std::exp(specfun::log_gamma(cplx(j + 1.0) - ia_over_k) -
                  specfun::log_gamma(cplx(j + 1.0) + ia_over_k));
}

std::vector<Pole> enumerate_poles(int j, double alpha, double lambda, int count) {
  if (alpha == 0.0) throw std::domain_error("enumerate_poles: alpha must be nonzero");
  const ham::Family fam = alpha > 0.0 ? ham::Family::I : ham::Family::II;
  std::vector<Pole> poles;
  poles.reserve(count);
  for (int k = 1; k <= count; ++k) {
    const int n = j + k;
    Pole pole;
    pole.level = ham::bound_energy(fam, n, j, alpha, lambda);
    pole.p = momentum_map(pole.level.value, lambda);
    // at p_n = i alpha/n the numerator Gamma(j+1 - i alpha/p) sits on the
    // pole j+1-n, where the reciprocal vanishes
    const cplx z = cplx(j + 1.0) - cplx(0.0, 1.0) * alpha / pole.p;
    pole.gamma_residual = std::abs(specfun::recip_gamma(z));
    poles.push_back(pole);
  }
  return poles;
}

double so31_casimir_tau(double energy, double q, double lambda) {
  if (!(energy > 0.0) || !(energy < ham::e_crit(lambda)))
    throw std::domain_error("so31_casimir_tau: energy must lie inside (0, 2/lambda^2)");
  return 1.0 + q * q / (2.0 * energy - lambda * lambda * energy * energy);
}

}  // namespace ncqm::scatter
