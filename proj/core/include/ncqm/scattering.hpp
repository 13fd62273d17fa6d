#pragma once

#include <complex>
#include <vector>

#include "ncqm/hamiltonian.hpp"

namespace ncqm::scatter {

using cplx = std::complex<double>;

// p = sqrt(2E(1 - lambda^2 E / 2)), the branch continuous from the upper
// half E-plane: positive on the scattering interval (0, 2/lambda^2), upper
// imaginary axis for E < 0, lower imaginary axis for E > 2/lambda^2.
cplx momentum_map(cplx energy, double lambda);

// Inverse map E = (1/lambda^2)(1 + i sqrt(lambda^2 p^2 - 1)).
cplx energy_from_p(cplx p, double lambda);

// Omega = (p - i lambda E)/(p + i lambda E); unimodular on the scattering
// interval. At the bound energies (E + i0 side) Omega * Omega_n^I = 1 for
// family I and Omega = -1/Omega_n^II for family II.
cplx omega_map(cplx energy, double lambda);

// Omega_n images of the bound energies (both in (0,1)).
double omega_bound_I(int n, double alpha, double lambda);
double omega_bound_II(int n, double alpha, double lambda);

// Partial-wave S-matrix Gamma(j+1 - i alpha/p) / Gamma(j+1 + i alpha/p) on
// the scattering interval.
cplx s_matrix(int j, double energy, double alpha, double lambda);

// lambda = 0 Coulomb S-matrix with k = sqrt(2E).
cplx s_matrix_standard(int j, double energy, double alpha);

struct Pole {
  ham::EnergyLevel level;
  cplx p;                 // i alpha / n
  double gamma_residual;  // |1/Gamma| at the argument that pins the pole
};

// Closed-form pole positions p_n = i alpha / n, n = j+1 .. j+count; family I
// for alpha > 0, family II for alpha < 0.
std::vector<Pole> enumerate_poles(int j, double alpha, double lambda, int count);

// SO(3,1) Casimir value tau = 1 + q^2/(2E - lambda^2 E^2) on the scattering
// interval; principal series for tau > 1.
double so31_casimir_tau(double energy, double q, double lambda);

}  // namespace ncqm::scatter
