#include "ncqm/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ncqm/specfun.hpp"
#include "ncqm/tridiag.hpp"

namespace ncqm::ham {

double e_crit(double lambda) { return 2.0 / (lambda * lambda); }

std::pair<double, double> energy_pair(double kappa, double lambda) {
  const double s = std::sqrt(1.0 + kappa * kappa);
  const double e1 = -kappa * kappa / (lambda * lambda * (1.0 + s));
  return {e1, e_crit(lambda) - e1};
}

EnergyLevel bound_energy(Family family, int n, int j, double alpha, double lambda) {
  if (n < j + 1) throw std::invalid_argument("bound_energy: need n >= j+1");
  if (family == Family::I && alpha <= 0.0)
    throw std::domain_error("bound_energy: family I needs attractive coupling (alpha > 0)");
  if (family == Family::II && alpha >= 0.0)
    throw std::domain_error("bound_energy: family II needs repulsive coupling (alpha < 0)");
  const double kappa = alpha * lambda / double(n);
  const auto [e1, e2] = energy_pair(kappa, lambda);
  return {family, n, j, family == Family::I ? e1 : e2};
}

OpWave double_commutator(const Workspace& ws, const OpWave& psi) {
  OpWave acc = ws.zero();
  for (int alpha = 0; alpha < 2; ++alpha) {
    OpWave inner = ws.a_hat(alpha, psi) - ws.b_hat(alpha, psi);          // [a, psi]
    acc = acc + ws.ad_hat(alpha, inner) - ws.bd_hat(alpha, inner);       // [ad, .]
  }
  return acc;
}

SuperOp laplacian_superop(const Workspace& ws) {
  SuperOp op;
  op.degree = 2;
  op.label = "laplacian";
  op.action = [&ws](const OpWave& p) {
    OpWave d = double_commutator(ws, p);
    return cplx(-1.0 / ws.lambda()) * ws.r_left(-1, d);
  };
  return op;
}

SuperOp hamiltonian_superop(const Workspace& ws, double q) {
  SuperOp op;
  op.degree = 2;
  op.label = "hamiltonian";
  op.action = [&ws, q](const OpWave& p) {
    OpWave d = double_commutator(ws, p);
    OpWave kin = cplx(1.0 / (2.0 * ws.lambda())) * ws.r_left(-1, d);
    OpWave pot = cplx(-q) * ws.r_left(-1, p);
    return kin + pot;
  };
  return op;
}

std::vector<double> solve_nc_laplace(double q, double q0, double lambda, int n_len) {
  // (N+2)U(N+1) - (N+1)U(N) = (N+1)U(N) - N U(N-1), U(0) = q0 - q/lambda;
  // run in extended precision so hundreds of forward steps keep 1e-13
  std::vector<double> u(static_cast<std::size_t>(n_len));
  long double prev = (long double)q0 - (long double)q / lambda;
  u[0] = double(prev);
  if (n_len > 1) {
    // first step from (M+1)U(M) - M U(M-1) = q0 at M = 1
    long double cur = (q0 + prev) / 2.0L;
    u[1] = double(cur);
    for (int n = 1; n + 1 < n_len; ++n) {
      const long double next = (2.0L * (n + 1) * cur - (long double)n * prev) / (n + 2.0L);
      u[n + 1] = double(next);
      prev = cur;
      cur = next;
    }
  }
  return u;
}

double nc_coulomb_closed(double q, double q0, double lambda, int n) {
  return -q / (lambda * double(n + 1)) + q0;
}

RadialHamiltonian build_radial_hamiltonian(int j, double q, double lambda, int len) {
  if (len < 2) throw std::invalid_argument("build_radial_hamiltonian: window too small");
  RadialHamiltonian h;
  h.j = j;
  h.lambda = lambda;
  h.q = q;
  const double il2 = 1.0 / (lambda * lambda);
  h.diag.resize(len);
  h.upper.resize(len - 1);
  h.lower.resize(len - 1);
  h.weights.resize(len);
  for (int nu = 0; nu < len; ++nu) {
    const double np = double(nu + j + 1);
    h.diag[nu] = il2 - q / (lambda * np);
    h.weights[nu] = radial_weight(j, nu);
    if (nu + 1 < len) h.upper[nu] = -0.5 * il2 * double(nu + 2 * j + 2) / np;
    if (nu >= 1) h.lower[nu - 1] = -0.5 * il2 * double(nu) / double(nu + j + 1);
  }
  // weight similarity: H_sym[nu, nu+1] = T[nu, nu+1] sqrt(w(nu)/w(nu+1))
  h.sym_diag = h.diag;
  h.sym_off.resize(len - 1);
  for (int nu = 0; nu + 1 < len; ++nu)
    h.sym_off[nu] = h.upper[nu] * std::sqrt(h.weights[nu] / h.weights[nu + 1]);
  return h;
}

RadialHamiltonian build_radial_hamiltonian(int j, double q, double lambda,
                                           const fock::FockSpace& space) {
  if (space.n_max() < j + 4)
    throw std::invalid_argument("build_radial_hamiltonian: need n_max >= j + 4");
  const int len = (space.n_max() - j + 1) - 2;  // drop two boundary rows
  return build_radial_hamiltonian(j, q, lambda, len);
}

Mat assemble_radial_via_opwave(const Workspace& ws, int j, double q) {
  const int len = ws.n_max() - j + 1;
  SuperOp h = hamiltonian_superop(ws, q);

  std::vector<OpWave> basis;
  std::vector<double> norms;
  basis.reserve(len);
  for (int nu = 0; nu < len; ++nu) {
    RadialVector r;
    r.j = j;
    r.lambda = ws.lambda();
    r.coeffs.assign(static_cast<std::size_t>(len), cplx(0.0));
    r.coeffs[nu] = 1.0;
    basis.push_back(opwave::build_psi_jm(ws, {j, j}, r));
    norms.push_back(opwave::hs_norm_sq(basis.back()));
  }

  Mat t(static_cast<std::size_t>(len));
  for (int nu = 0; nu < len; ++nu) {
    OpWave hb = h(basis[nu]);
    for (int mu = 0; mu < len; ++mu)
      t(mu, nu) = opwave::hs_inner(basis[mu], hb) / norms[mu];
  }
  return t;
}

std::vector<double> radial_eigenvalues(const RadialHamiltonian& h) {
  std::vector<double> d = h.sym_diag;
  std::vector<double> e(h.size(), 0.0);
  for (std::size_t i = 1; i < h.size(); ++i) e[i] = h.sym_off[i - 1];
  tridiag_ql(d, e, nullptr);
  return d;
}

std::vector<EigenPair> diagonalize(const RadialHamiltonian& h, int count, bool lowest) {
  const std::size_t n = h.size();
  std::vector<double> d = h.sym_diag;
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) e[i] = h.sym_off[i - 1];
  std::vector<std::vector<double>> z;
  tridiag_ql(d, e, &z);

  double factj = 1.0;
  for (int i = 2; i <= h.j; ++i) factj *= i;
  const double full_pref =
      4.0 * std::numbers::pi * std::pow(h.lambda, 3 + 2 * h.j) / (factj * factj);

  std::vector<EigenPair> out;
  const int c = std::min<int>(count, static_cast<int>(n));
  for (int k = 0; k < c; ++k) {
    const std::size_t col = lowest ? k : n - 1 - k;
    EigenPair p;
    p.value = d[col];
    p.vec.j = h.j;
    p.vec.lambda = h.lambda;
    p.vec.coeffs.resize(n);
    for (std::size_t nu = 0; nu < n; ++nu)
      p.vec.coeffs[nu] = z[nu][col] / std::sqrt(h.weights[nu] * full_pref);
    out.push_back(std::move(p));
  }
  return out;
}

RadialVector solve_radial_closed_form(const RadialParams& p) {
  using specfun::hyp1f1;
  using specfun::hyp2f1;
  RadialVector r;
  r.j = p.j;
  r.lambda = p.lambda;
  r.coeffs.resize(static_cast<std::size_t>(p.len));
  const double c = 2.0 * p.j + 2.0;

  switch (p.kind) {
    case RadialCase::boundI:
    case RadialCase::boundII: {
      const bool fam1 = p.kind == RadialCase::boundI;
      if (fam1 && p.alpha <= 0.0) throw std::domain_error("boundI needs alpha > 0");
      if (!fam1 && p.alpha >= 0.0) throw std::domain_error("boundII needs alpha < 0");
      if (p.n < p.j + 1) throw std::domain_error("bound family needs n >= j+1");
      const double kappa = p.alpha * p.lambda / double(p.n);
      const double s = std::sqrt(1.0 + kappa * kappa);
      // Omega^I = 1/(s + kappa); for family II the magnitude is the same with
      // kappa -> |kappa| and the prefactor alternates sign.
      const double omega = 1.0 / (s + std::abs(kappa));
      const double pref = fam1 ? omega : -omega;
      const double arg = fam1 ? -2.0 * kappa / omega : 2.0 * kappa / omega;
      const double a = double(p.j + 1 - p.n);  // -n_r, terminates the series
      double pw = 1.0;
      for (int nu = 0; nu < p.len; ++nu) {
        r.coeffs[nu] = pw * hyp2f1(a, double(-nu), c, arg);
        pw *= pref;
      }
      break;
    }
    case RadialCase::eta0: {
      for (int nu = 0; nu < p.len; ++nu)
        r.coeffs[nu] = hyp1f1(double(-nu), c, 2.0 * p.alpha * p.lambda);
      break;
    }
    case RadialCase::eta1: {
      double sign = 1.0;
      for (int nu = 0; nu < p.len; ++nu) {
        r.coeffs[nu] = sign * hyp1f1(double(-nu), c, -2.0 * p.alpha * p.lambda);
        sign = -sign;
      }
      break;
    }
    case RadialCase::scatter: {
      // R(nu) = Omega^-nu 2F1(j+1 - i alpha/p, -nu; 2j+2; 2 i lambda p Omega)
      const cplx E = p.energy;
      const double l = p.lambda;
      const cplx p2 = 2.0 * E - (l * l) * E * E;
      const cplx mom = std::sqrt(p2);  // scattering interval: real positive
      const cplx omega = (mom - cplx(0.0, 1.0) * l * E) / (mom + cplx(0.0, 1.0) * l * E);
      const cplx a = cplx(p.j + 1.0) - cplx(0.0, 1.0) * p.alpha / mom;
      const cplx arg = cplx(0.0, 2.0) * l * mom * omega;
      cplx pw = 1.0;
      for (int nu = 0; nu < p.len; ++nu) {
        r.coeffs[nu] = pw * hyp2f1(a, double(-nu), c, arg);
        pw /= omega;
      }
      break;
    }
    case RadialCase::generic_plus:
    case RadialCase::generic_minus: {
      const double sign = p.kind == RadialCase::generic_plus ? 1.0 : -1.0;
      const double l = p.lambda;
      const cplx eta2 = l * l * p.energy / 2.0;  // eta^2 = (k lambda / 2)^2
      const cplx w = std::sqrt(eta2) * std::sqrt(eta2 - 1.0);
      if (w == cplx(0.0))
        throw std::domain_error("generic branch needs eta != 0, 1 (use eta0/eta1)");
      const cplx pref = 1.0 + 2.0 * sign * w - 2.0 * eta2;
      const cplx a = cplx(p.j + 1.0) + sign * p.alpha * l / (2.0 * w);
      const cplx arg = sign * 4.0 * w / pref;
      cplx pw = 1.0;
      for (int nu = 0; nu < p.len; ++nu) {
        r.coeffs[nu] = pw * hyp2f1(a, double(-nu), c, arg);
        pw *= pref;
      }
      break;
    }
  }
  return r;
}

double radial_eigen_residual(const RadialHamiltonian& h, const RadialVector& r, cplx energy) {
  const std::size_t rows = std::min(h.size(), r.size()) - 1;  // interior rows 0..rows-1
  double num = 0.0, den = 0.0;
  for (std::size_t nu = 0; nu < rows; ++nu) {
    cplx v = h.diag[nu] * r.coeffs[nu];
    if (nu >= 1) v += h.lower[nu - 1] * r.coeffs[nu - 1];
    v += h.upper[nu] * r.coeffs[nu + 1];
    v -= energy * r.coeffs[nu];
    const double w = h.weights[nu];
    num += w * std::norm(v);
    den += w * std::norm(r.coeffs[nu]);
  }
  return std::sqrt(num / den);
}

double reflection_check(int n, int j, double alpha, double lambda, int len) {
  if (alpha <= 0.0) throw std::invalid_argument("reflection_check: alpha must be positive");
  RadialParams p1{RadialCase::boundI, j, lambda, alpha, n, 0.0, len};
  RadialParams p2{RadialCase::boundII, j, lambda, -alpha, n, 0.0, len};
  const RadialVector r1 = solve_radial_closed_form(p1);
  const RadialVector r2 = solve_radial_closed_form(p2);
  double worst = 0.0;
  double sign = 1.0;
  for (int nu = 0; nu < len; ++nu) {
    worst = std::max(worst, std::abs(r2.coeffs[nu] - sign * r1.coeffs[nu]));
    sign = -sign;
  }
  return worst;
}

}  // namespace ncqm::ham
