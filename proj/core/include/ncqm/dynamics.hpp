#pragma once

#include <vector>

#include "ncqm/hamiltonian.hpp"
#include "ncqm/opwave.hpp"

namespace ncqm::dyn {

using opwave::OpWave;
using opwave::SuperOp;
using opwave::Workspace;

// sigma-contracted two-sided ladder bilinears of the auxiliary-operator set:
//   w_hat      = sum_a (ad_a psi a_a - a_a psi ad_a)
//   zeta_hat   = sum_a (ad_a psi a_a + a_a psi ad_a)
//   w_k, zeta_k: same with sigma^k_{ab} in place of delta_{ab}
OpWave w_hat(const Workspace& ws, const OpWave& psi);
OpWave zeta_hat(const Workspace& ws, const OpWave& psi);
OpWave w_k_hat(const Workspace& ws, int k, const OpWave& psi);
OpWave zeta_k_hat(const Workspace& ws, int k, const OpWave& psi);

// W_k = (2/lambda) X_k - zeta_k and W = (2/lambda) r - zeta; the primed
// variants add omega X_k (resp. omega r) with omega = -2 lambda E.
OpWave w_cap_k(const Workspace& ws, int k, const OpWave& psi);
OpWave w_cap(const Workspace& ws, const OpWave& psi);
OpWave w_prime_k(const Workspace& ws, int k, double omega, const OpWave& psi);
OpWave w_prime(const Workspace& ws, double omega, const OpWave& psi);

// Velocity V^i psi = (i/2r) sigma^i_{ab}(ad_a psi a_b - a_b psi ad_a).
SuperOp velocity_superop(const Workspace& ws, int i);
// Fourth E(4) component V_4 psi = (1/2r)(ad_a psi a_a + a_a psi ad_a).
SuperOp velocity4_superop(const Workspace& ws);
// Symmetric coordinate X_k and L_k come from opwave.

// Ehrenfest gradient helper of the deformed Leibniz rule:
// K^i(A,B) = -(i/2r) sigma^i_{ab}([ad_a,A][a_b,B] - [a_b,A][ad_a,B]).
OpWave leibniz_correction(const Workspace& ws, int i, const OpWave& A, const OpWave& B);

// lambda-difference quotients of a radial potential (centered at r).
std::vector<cplx> potential_diag(const Workspace& ws, double q);
std::vector<cplx> potential_d1_diag(const Workspace& ws, double q);  // zero on the vacuum block
std::vector<cplx> potential_d2_diag(const Workspace& ws, double q);  // zero on the vacuum block

// Residuals, each relative to the windowed norm of psi.
double uncertainty_residual(const Workspace& ws, int i, int j, const OpWave& psi);
double velocity_commutator_residual(const Workspace& ws, const OpWave& psi);
double v2_h0_residual(const Workspace& ws, const OpWave& psi);

struct E4Report {
  double lab_algebra = 0.0;     // [L_ab, L_cd] relations via L_i / X_i components
  double v_commutators = 0.0;   // [V_a, V_b] = 0, all pairs incl. V_4
  double covariance = 0.0;      // [L_ab, V_c] relations
  double casimir2 = 0.0;        // C_2 = V_a V_a = 1/lambda^2
  double lubanski = 0.0;        // Lambda_a psi = 0, a = 1..4
  double v4_consistency = 0.0;  // V_4 + lambda H_0 = 1/lambda
  double worst() const;
};
E4Report e4_symmetry_suite(const Workspace& ws, const OpWave& psi);

// NC Ehrenfest theorem residual for U = -q/r. The vacuum block is excluded:
// the centered lambda-difference of 1/r is undefined there.
double ehrenfest_residual(const Workspace& ws, double q, const OpWave& psi);

// Laplace-Runge-Lenz component, symmetrized cross product plus q X_k / r.
SuperOp lrl_superop(const Workspace& ws, int k, double q);
// Same operator rewritten through W'_k and W' at energy parameter E; equal to
// the direct form on balanced states for every E.
SuperOp lrl_superop_rewritten(const Workspace& ws, int k, double q, double energy);

struct SymmetryVerdict {
  enum class Algebra { so4, so31, e3 };
  Algebra algebra = Algebra::so4;
  double energy = 0.0;
  double factor = 0.0;  // -2E + lambda^2 E^2
  double eigen_gate = 0.0;
  double conservation = 0.0;       // [A_k, H] psi on eigenstates
  double lrl_forms = 0.0;          // direct vs rewritten construction
  double on_shell_w_prime = 0.0;   // A_k psi = W'_k psi / (2 lambda)
  double algebra_aa = 0.0;         // [A_i, A_j] = i factor eps L_k
  double algebra_la = 0.0;         // [L_i, A_j] = i eps A_k
  double casimir1 = 0.0;           // L_j A_j psi = 0
  double casimir2_value = 0.0;     // measured; q^2 expected
  double casimir2_residual = 0.0;
  double worst() const;
};

// Runs the dynamical-symmetry checks on (approximate) eigenstates at energy
// E; every residual is windowed to stay clear of the truncation boundary.
SymmetryVerdict lrl_algebra_suite(const Workspace& ws, double energy, double q,
                                  const std::vector<OpWave>& states);

// Bound energies from the SO(4) Casimir condition n^2 = q^2/(l^2 E^2 - 2E);
// shares the closed-form subexpression with ham::bound_energy, so the values
// agree bit for bit.
std::pair<double, double> spectrum_from_symmetry(double q, double lambda, int n);

}  // namespace ncqm::dyn
