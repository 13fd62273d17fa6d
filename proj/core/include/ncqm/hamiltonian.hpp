#pragma once

#include <vector>

#include "ncqm/opwave.hpp"
#include "ncqm/radial.hpp"

namespace ncqm::ham {

using opwave::OpWave;
using opwave::SuperOp;
using opwave::Workspace;

double e_crit(double lambda);  // kinetic cut-off 2/lambda^2

enum class Family { I, II };

struct EnergyLevel {
  Family family = Family::I;
  int n = 0;
  int j = 0;
  double value = 0.0;
};

// Both bound families from the shared subexpression; first = E_I (below 0),
// second = E_II = 2/lambda^2 - E_I (above the cut-off). kappa = coupling *
// lambda / n. E_I is evaluated as -kappa^2 / (lambda^2 (1 + sqrt(1+kappa^2)))
// so small lambda does not cancel.
std::pair<double, double> energy_pair(double kappa, double lambda);

// E^I (attractive, alpha > 0) or E^II (repulsive, alpha < 0), n >= j+1.
EnergyLevel bound_energy(Family family, int n, int j, double alpha, double lambda);

// sum_alpha [ad_alpha, [a_alpha, psi]] as left/right ladder actions.
OpWave double_commutator(const Workspace& ws, const OpWave& psi);

// Delta_lambda psi = -(1/(lambda^2 (N+1))) [ad,[a,psi]].
SuperOp laplacian_superop(const Workspace& ws);
// H psi = (1/(2 lambda r)) [ad,[a,psi]] - (q/r) psi, with m_e = hbar = 1.
SuperOp hamiltonian_superop(const Workspace& ws, double q);

// Radial NC Laplace equation: forward recurrence for U(N), plus the closed
// form -q/(lambda(N+1)) + q0 it must reproduce.
std::vector<double> solve_nc_laplace(double q, double q0, double lambda, int n_len);
double nc_coulomb_closed(double q, double q0, double lambda, int n);

// Radial reduction of H in the fixed-j sector on coefficient sequences
// R(nu), nu = 0 .. len-1 (block total quanta n = nu + j):
//   (H R)(nu) = [1/l^2 - q/(l(nu+j+1))] R(nu)
//               - nu/(2 l^2 (nu+j+1)) R(nu-1)
//               - (nu+2j+2)/(2 l^2 (nu+j+1)) R(nu+1)
// T is symmetric under the radial weight w(nu); H_sym = D^{1/2} T D^{-1/2}.
struct RadialHamiltonian {
  int j = 0;
  double lambda = 1.0;
  double q = 0.0;
  std::vector<double> diag;   // T[nu, nu]
  std::vector<double> lower;  // T[nu, nu-1], index nu-1
  std::vector<double> upper;  // T[nu, nu+1], index nu
  std::vector<double> sym_diag, sym_off;
  std::vector<double> weights;

  std::size_t size() const { return diag.size(); }
};

RadialHamiltonian build_radial_hamiltonian(int j, double q, double lambda, int len);
// Sized from a truncated space, with the last two boundary rows discarded.
RadialHamiltonian build_radial_hamiltonian(int j, double q, double lambda,
                                           const fock::FockSpace& space);

// Verification route: assemble the same matrix by expanding H applied to
// block-indicator wave functions in the weighted HS inner product. Dense
// (n_max - j + 1) square; used to cross-check the analytic entries and the
// tridiagonality claim.
Mat assemble_radial_via_opwave(const Workspace& ws, int j, double q);

struct EigenPair {
  double value = 0.0;
  RadialVector vec;
};

// All eigenvalues ascending.
std::vector<double> radial_eigenvalues(const RadialHamiltonian& h);
// `count` eigenpairs from the bottom (lowest = true) or the top of the
// spectrum, eigenvectors normalized to unit radial norm (4 pi prefactor
// included).
std::vector<EigenPair> diagonalize(const RadialHamiltonian& h, int count, bool lowest = true);

enum class RadialCase { generic_plus, generic_minus, eta0, eta1, boundI, boundII, scatter };

struct RadialParams {
  RadialCase kind = RadialCase::boundI;
  int j = 0;
  double lambda = 1.0;
  double alpha = 1.0;
  int n = 1;            // principal quantum number (bound families)
  cplx energy = 0.0;    // generic/scatter energy
  int len = 16;         // number of coefficients R(0..len-1)
};

// Closed-form radial solutions, normalized to R(0) = 1: a prefactor^nu
// times a terminating 2F1 (or 1F1 at the interval edges).
RadialVector solve_radial_closed_form(const RadialParams& p);

// Weighted interior residual ||T R - E R|| / ||R|| over rows 0..L-2.
double radial_eigen_residual(const RadialHamiltonian& h, const RadialVector& r, cplx energy);

// max_nu |R^II(-alpha)(nu) - (-1)^nu R^I(alpha)(nu)|, both normalized to
// R(0) = 1; alpha > 0.
double reflection_check(int n, int j, double alpha, double lambda, int len);

}  // namespace ncqm::ham
