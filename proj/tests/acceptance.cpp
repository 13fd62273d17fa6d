// Acceptance suite: every release gate in one binary, one verdict line per
// criterion. Exit status is nonzero when any gate fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "ncqm/dynamics.hpp"
#include "ncqm/hamiltonian.hpp"
#include "ncqm/rng.hpp"
#include "ncqm/scattering.hpp"
#include "ncqm/suites.hpp"

using namespace ncqm;

namespace {

int failures = 0;

void verdict(int id, const std::string& what, bool pass, double measured, double gate) {
  std::printf("[%s] criterion %02d: %-58s (measured %.3e, gate %.1e)\n", pass ? "PASS" : "FAIL",
              id, what.c_str(), measured, gate);
  if (!pass) ++failures;
}

std::map<std::string, suites::CheckRow> by_anchor(const std::vector<suites::CheckRow>& rows) {
  std::map<std::string, suites::CheckRow> m;
  for (const auto& r : rows) m[r.anchor] = r;
  return m;
}

double worst_of(const std::map<std::string, suites::CheckRow>& rows,
                std::initializer_list<const char*> anchors) {
  double w = 0.0;
  for (const char* a : anchors) w = std::max(w, rows.at(a).residual);
  return w;
}

}  // namespace

int main() {
  // 1. bound spectrum I: three lowest radial levels at lambda = 0.5, q = 1
  {
    const auto t0 = std::chrono::steady_clock::now();
    const double lambda = 0.5, q = 1.0;
    auto h = ham::build_radial_hamiltonian(0, q, lambda, fock::FockSpace(300));
    auto pairs = ham::diagonalize(h, 3, true);
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const double want = ham::bound_energy(ham::Family::I, n, 0, q, lambda).value;
      worst = std::max(worst, std::abs(pairs[n - 1].value - want) / std::abs(want));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    verdict(1, "bound spectrum I vs closed form (n=1..3)", worst <= 1e-6 && secs <= 10.0,
            worst, 1e-6);
  }

  // 2. mirror spectrum II for the repulsive coupling
  {
    const double lambda = 0.5, q = -1.0;
    auto h = ham::build_radial_hamiltonian(0, q, lambda, fock::FockSpace(300));
    auto top = ham::diagonalize(h, 3, false);
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
      const double e1 = ham::bound_energy(ham::Family::I, n, 0, -q, lambda).value;
      const double want = ham::e_crit(lambda) - e1;
      worst = std::max(worst, std::abs(top[n - 1].value - want) / std::abs(want));
    }
    verdict(2, "mirror spectrum II above the kinetic cut-off", worst <= 1e-6, worst, 1e-6);
  }

  // 3. small-lambda correspondence: Richardson-extrapolated lambda^2
  // coefficient of E^I against the expansion of the exact closed form.
  // sqrt(1+x) = 1 + x/2 - x^2/8 + ... fixes the coefficient to q^4/(8 n^4).
  {
    const double q = 1.0;
    double worst = 0.0;
    for (int n = 1; n <= 2; ++n) {
      auto coeff = [&](double lambda) {
        const double e = dyn::spectrum_from_symmetry(q, lambda, n).first;
        return (e + q * q / (2.0 * n * n)) / (lambda * lambda);
      };
      const double g1 = coeff(1e-2), g2 = coeff(5e-3), g3 = coeff(2.5e-3);
      const double rich = (4.0 * g3 - g2) / 3.0;
      (void)g1;
      const double expect = std::pow(q, 4) / (8.0 * std::pow(double(n), 4));
      worst = std::max(worst, std::abs(rich - expect) / expect);
    }
    verdict(3, "lambda^2 coefficient of E^I by Richardson extrapolation", worst <= 0.05, worst,
            0.05);
  }

  // 4. hidden-symmetry degeneracy across j at fixed principal n
  {
    const double lambda = 0.5, q = 1.0;
    double worst = 0.0;
    for (int n = 2; n <= 3; ++n) {
      std::vector<double> values;
      for (int j = 0; j < n; ++j) {
        auto h = ham::build_radial_hamiltonian(j, q, lambda, 300);
        auto p = ham::diagonalize(h, n - j, true);
        values.push_back(p[n - j - 1].value);
      }
      for (double v : values)
        worst = std::max(worst, std::abs(v - values[0]) / std::abs(values[0]));
    }
    verdict(4, "eigenvalues agree across j sectors at fixed n", worst <= 1e-6, worst, 1e-6);
  }

  // 5. algebra suite at n_max = 12, entrywise absolute residuals
  {
    suites::SuiteConfig cfg;
    cfg.n_max = 12;
    cfg.lambda = 0.5;
    cfg.seed = 1;
    cfg.samples = 5;
    auto rows = by_anchor(suites::algebra_suite(cfg));
    const double worst = worst_of(rows, {"2.1", "2.2", "2.5", "4.2", "5.12"});
    verdict(5, "coordinate / ladder / momentum / velocity algebra", worst <= 1e-12, worst, 1e-12);
  }

  // 6. ordering suite: exact integers and the exponential identity
  {
    suites::SuiteConfig cfg;
    auto rows = by_anchor(suites::ordering_suite(cfg));
    const bool exact = rows.at("2.9").residual == 0.0 && rows.at("2.3.1").residual == 0.0;
    const double e211 = rows.at("2.11").residual;
    verdict(6, "normal powers (exact) and the ordered exponential", exact && e211 <= 1e-13,
            e211, 1e-13);
  }

  // 7. special functions: Kummer grid, Gamma recurrence, limit-formula rate
  {
    suites::SuiteConfig cfg;
    auto rows = by_anchor(suites::specfun_suite(cfg));
    const double worst = worst_of(rows, {"4.28", "gamma-rec"});
    const bool rate_ok = rows.at("4.33").pass;
    verdict(7, "Kummer identity, Gamma recurrence, 1/b limit rate", worst <= 1e-12 && rate_ok,
            worst, 1e-12);
  }

  // 8. radial norm formula against the direct weighted trace
  {
    opwave::Workspace ws(12, 0.45);
    Rng rng(55);
    double worst = 0.0;
    for (int j = 0; j <= 2; ++j)
      for (int trial = 0; trial < 20; ++trial) {
        RadialVector r;
        r.j = j;
        r.lambda = ws.lambda();
        const int len = ws.n_max() - j + 1;
        r.coeffs.resize(len);
        std::vector<cplx> cs(5);
        for (auto& c : cs) c = rng.complex_box();
        for (int nu = 0; nu < len; ++nu) {
          cplx v = 0.0;
          const double t = double(nu) / double(len);
          for (int d = 4; d >= 0; --d) v = v * t + cs[d];
          r.coeffs[nu] = v;
        }
        const int m = -j + int(rng.uniform01() * (2 * j + 1));
        opwave::OpWave p = opwave::build_psi_jm(ws, {j, m}, r);
        const double direct = opwave::hs_norm_sq(p);
        const double formula = opwave::radial_norm_formula(j, r, ws.lambda());
        worst = std::max(worst, std::abs(direct - formula) / formula);
      }
    verdict(8, "radial norm formula equals the weighted trace", worst <= 1e-12, worst, 1e-12);
  }

  // 9. dynamics suite at n_max = 10 on 20 seeded random balanced states
  {
    suites::SuiteConfig cfg;
    cfg.n_max = 10;
    cfg.lambda = 0.5;
    cfg.q = 1.0;
    cfg.seed = 1;
    cfg.samples = 20;
    auto rows = by_anchor(suites::dynamics_suite(cfg));
    const double worst =
        worst_of(rows, {"5.15", "5.17", "5.21", "5.26", "5.28", "5.30", "5.34"});
    verdict(9, "velocity / uncertainty / E(4) / Ehrenfest residuals", worst <= 1e-10, worst,
            1e-10);
  }

  // 10./11. one pass over the LRL + appendix suite serves both gates
  {
    suites::SuiteConfig cfg;
    cfg.n_max = 10;
    cfg.samples = 5;
    auto rows = by_anchor(suites::lrl_suite(cfg));
    const bool gate = rows.at("6.13-gate").residual <= 1e-8;
    const double worst = worst_of(rows, {"6.15", "6.17", "6.18", "6.19", "6.20"});
    const double spectrum = rows.at("6.25").residual;
    verdict(10, "LRL conservation, so(4) algebra, Casimir values",
            gate && worst <= 1e-7 && spectrum <= 1e-12, worst, 1e-7);

    const double ledger =
        worst_of(rows, {"8.40", "8.41", "8.42", "8.43", "8.44", "8.45", "8.46", "8.47", "8.48",
                        "8.49", "8.51", "8.52", "8.53", "8.54", "8.62", "8.63a", "8.63b", "8.64"});
    verdict(11, "auxiliary-operator identity ledger", ledger <= 1e-10, ledger, 1e-10);
  }

  // 12. scattering: unitarity, pole residuals, small-lambda limit, spectra
  {
    const double lambda = 0.5, alpha = 1.0;
    double unit = 0.0;
    for (int j = 0; j <= 2; ++j)
      for (int i = 1; i <= 100; ++i) {
        const double e = ham::e_crit(lambda) * i / 101.0;
        unit = std::max(unit, std::abs(std::abs(scatter::s_matrix(j, e, alpha, lambda)) - 1.0));
      }
    double pole_res = 0.0, pole_vs_diag = 0.0;
    auto poles = scatter::enumerate_poles(0, alpha, lambda, 3);
    auto h = ham::build_radial_hamiltonian(0, alpha, lambda, 300);
    auto pairs = ham::diagonalize(h, 3, true);
    for (int k = 0; k < 3; ++k) {
      pole_res = std::max(pole_res, poles[k].gamma_residual);
      pole_vs_diag = std::max(pole_vs_diag, std::abs(poles[k].level.value - pairs[k].value) /
                                                std::abs(pairs[k].value));
    }
    double qm = 0.0;
    for (int j = 0; j <= 2; ++j)
      for (double e : {0.2, 0.7, 1.9, 4.4}) {
        const cplx nc = scatter::s_matrix(j, e, alpha, 1e-4);
        const cplx std_s = scatter::s_matrix_standard(j, e, alpha);
        qm = std::max(qm, std::abs(nc - std_s) / std::abs(std_s));
      }
    const bool ok = unit <= 1e-12 && pole_res <= 1e-12 && qm <= 1e-6 && pole_vs_diag <= 1e-6;
    verdict(12, "S-matrix unitarity, poles, small-lambda limit",
            ok, std::max({unit, pole_res, qm}), 1e-6);
  }

  // 13. reflection symmetry between the two bound families
  {
    double worst = 0.0;
    for (int j = 0; j <= 2; ++j)
      for (int n = j + 1; n <= 3; ++n)
        worst = std::max(worst, ham::reflection_check(n, j, 1.0, 0.5, 40));
    verdict(13, "family II mirrors family I with the alternating sign", worst <= 1e-10, worst,
            1e-10);
  }

  // 14. closed-form radial vectors are interior eigenvectors of T
  {
    const double lambda = 0.5, alpha = 1.0;
    double worst = 0.0;
    for (int j = 0; j <= 2; ++j) {
      auto h = ham::build_radial_hamiltonian(j, alpha, lambda, 60);
      for (int n = j + 1; n <= 3; ++n) {
        ham::RadialParams p;
        p.kind = ham::RadialCase::boundI;
        p.j = j;
        p.lambda = lambda;
        p.alpha = alpha;
        p.n = n;
        p.len = 60;
        const double e = ham::bound_energy(ham::Family::I, n, j, alpha, lambda).value;
        worst = std::max(worst, ham::radial_eigen_residual(h, ham::solve_radial_closed_form(p), e));
      }
    }
    verdict(14, "closed-form bound vectors satisfy the radial eigenproblem", worst <= 1e-8,
            worst, 1e-8);
  }

  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
