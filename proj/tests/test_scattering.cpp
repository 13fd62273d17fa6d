#include "doctest.h"
#include "ncqm/rng.hpp"
#include "ncqm/scattering.hpp"

#include <cmath>

using namespace ncqm;
using namespace ncqm::scatter;

TEST_CASE("momentum map branch structure") {
  const double lambda = 0.5;
  // E = 1/lambda^2 -> p = 1/lambda
  CHECK(std::abs(momentum_map(4.0, lambda) - cplx(2.0)) <= 1e-14);
  // E -> 0+ joins k = sqrt(2E)
  CHECK(std::abs(momentum_map(1e-8, lambda) - cplx(std::sqrt(2e-8))) <= 1e-12);
  // E = 2/lambda^2 -> p = 0
  CHECK(std::abs(momentum_map(ham::e_crit(lambda), lambda)) <= 1e-7);
  // below threshold: upper imaginary axis; above the cut-off: lower
  CHECK(momentum_map(-1.0, lambda).imag() > 0.0);
  CHECK(std::abs(momentum_map(-1.0, lambda).real()) <= 1e-14);
  CHECK(momentum_map(9.0, lambda).imag() < 0.0);

  // upper edge / lower edge of the branch cut (4.57-style)
  const cplx up = momentum_map(cplx(1.0, 1e-9), lambda);
  CHECK(up.imag() > 0.0);
  const cplx dn = momentum_map(cplx(7.0, 1e-9), lambda);
  CHECK(dn.imag() < 0.0);
}

TEST_CASE("inverse map composes to the identity on the upper half plane") {
  const double lambda = 0.7;
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const cplx e(rng.uniform(-3.0, 7.0), rng.uniform(0.05, 5.0));
    const cplx back = energy_from_p(momentum_map(e, lambda), lambda);
    CHECK(std::abs(back - e) <= 1e-12 * (1.0 + std::abs(e)));
  }
}

TEST_CASE("omega map: unit circle on the scattering interval, bound images") {
  const double lambda = 0.5, alpha = 1.0;
  for (int i = 1; i < 100; ++i) {
    const double e = ham::e_crit(lambda) * i / 100.0;
    CHECK(std::abs(std::abs(omega_map(e, lambda)) - 1.0) <= 1e-13);
  }
  // lambda E -> 0 at fixed p: Omega -> 1
  CHECK(std::abs(omega_map(1e-9, lambda) - cplx(1.0)) <= 1e-3);

  // family-I bound energies land on the real axis, reciprocal to Omega_n^I on
  // the E + i0 side; family II picks up the alternating sign
  for (int n = 1; n <= 4; ++n) {
    const double e1 = ham::bound_energy(ham::Family::I, n, 0, alpha, lambda).value;
    const cplx om = omega_map(e1, lambda);
    CHECK(std::abs(om.imag()) <= 1e-12);
    CHECK(std::abs(om * omega_bound_I(n, alpha, lambda) - cplx(1.0)) <= 1e-12);

    const double e2 = ham::bound_energy(ham::Family::II, n, 0, -alpha, lambda).value;
    const cplx om2 = omega_map(e2, lambda);
    CHECK(std::abs(om2 * omega_bound_II(n, -alpha, lambda) + cplx(1.0)) <= 1e-12);
  }
  CHECK_THROWS_AS((void)omega_map(0.0, lambda), std::domain_error);
}

TEST_CASE("s-matrix unitarity and trivial coupling") {
  const double lambda = 0.5;
  for (int j = 0; j <= 2; ++j)
    for (int i = 1; i < 100; ++i) {
      const double e = ham::e_crit(lambda) * i / 100.0;
      CHECK(std::abs(s_matrix(j, e, 0.0, lambda) - cplx(1.0)) <= 1e-14);
      CHECK(std::abs(std::abs(s_matrix(j, e, 1.0, lambda)) - 1.0) <= 1e-12);
      CHECK(std::abs(std::abs(s_matrix(j, e, -2.3, lambda)) - 1.0) <= 1e-12);
    }
  CHECK_THROWS_AS((void)s_matrix(0, -0.5, 1.0, lambda), std::domain_error);
  CHECK_THROWS_AS((void)s_matrix(0, ham::e_crit(lambda), 1.0, lambda), std::domain_error);
}

TEST_CASE("energy mirror symmetry of the S-matrix") {
  // p(E) = p(2/lambda^2 - E) exactly, so S inherits the mirror
  const double lambda = 0.6, alpha = 1.3;
  for (double e = 0.25; e < 0.5 * ham::e_crit(lambda); e += 0.37) {
    const double mirror = ham::e_crit(lambda) - e;
    const cplx s1 = s_matrix(1, e, alpha, lambda);
    const cplx s2 = s_matrix(1, mirror, alpha, lambda);
    CHECK(std::abs(s1 - s2) <= 1e-12);
  }
}

TEST_CASE("small-lambda S-matrix joins the standard Coulomb one") {
  const double lambda = 1e-4, alpha = 1.0;
  for (int j = 0; j <= 2; ++j)
    for (double e : {0.2, 0.7, 1.9, 4.4}) {
      const cplx nc = s_matrix(j, e, alpha, lambda);
      const cplx qm = s_matrix_standard(j, e, alpha);
      CHECK(std::abs(nc - qm) <= 1e-6 * std::abs(qm));
    }
}

TEST_CASE("pole enumeration: positions, residual gate, spectra") {
  const double lambda = 0.5;
  auto poles = enumerate_poles(0, 1.0, lambda, 5);
  REQUIRE(poles.size() == 5);
  for (int k = 0; k < 5; ++k) {
    const int n = k + 1;
    // p_n = i alpha / n on the nose
    CHECK(std::abs(poles[k].p - cplx(0.0, 1.0 / n)) <= 1e-12);
    CHECK(poles[k].gamma_residual <= 1e-12);
    CHECK(poles[k].level.value ==
          ham::bound_energy(ham::Family::I, n, 0, 1.0, lambda).value);
  }
  // repulsive coupling: family II above the cut-off
  auto rep = enumerate_poles(1, -1.0, lambda, 3);
  for (const auto& p : rep) {
    CHECK(p.level.value > ham::e_crit(lambda));
    CHECK(p.gamma_residual <= 1e-12);
    CHECK(p.p.imag() < 0.0);
  }
  // QM limit of the first pole
  auto qm = enumerate_poles(0, 1.0, 1e-6, 1);
  CHECK(qm[0].level.value == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK_THROWS_AS((void)enumerate_poles(0, 0.0, lambda, 2), std::domain_error);

  // pole energies equal the diagonalization bound energies
  auto h = ham::build_radial_hamiltonian(0, 1.0, lambda, 300);
  auto pairs = ham::diagonalize(h, 3, true);
  for (int k = 0; k < 3; ++k)
    CHECK(std::abs(pairs[k].value - poles[k].level.value) <=
          1e-6 * std::abs(poles[k].level.value));
}

TEST_CASE("SO(3,1) Casimir value on the scattering interval") {
  CHECK(so31_casimir_tau(1.0, 0.0, 1.0) == doctest::Approx(1.0));
  CHECK(so31_casimir_tau(1.0, 1.0, 1.0) == doctest::Approx(2.0));
  for (double e : {0.3, 1.0, 1.7}) CHECK(so31_casimir_tau(e, 0.7, 1.0) > 1.0);
  CHECK_THROWS_AS((void)so31_casimir_tau(3.0, 1.0, 1.0), std::domain_error);

  // the two energies sharing a tau value are mirror partners
  const double lambda = 1.0, q = 0.9;
  const double tau = so31_casimir_tau(0.4, q, lambda);
  const double disc = std::sqrt(1.0 - lambda * lambda * q * q / (tau - 1.0));
  const double e_minus = (1.0 - disc) / (lambda * lambda);
  const double e_plus = (1.0 + disc) / (lambda * lambda);
  CHECK(e_minus == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(so31_casimir_tau(e_plus, q, lambda) == doctest::Approx(tau).epsilon(1e-12));
  CHECK(e_plus + e_minus == doctest::Approx(ham::e_crit(lambda)).epsilon(1e-14));
}
