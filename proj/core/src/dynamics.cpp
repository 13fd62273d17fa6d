#include "ncqm/dynamics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ncqm::dyn {

namespace {

using opwave::hs_inner;
using opwave::hs_norm_sq_band;
using opwave::hs_norm_sq_window;
using opwave::Side;

struct SigmaEntry {
  int alpha, beta;
  cplx c;
};

const std::array<std::vector<SigmaEntry>, 3> kSigma = {{
    {{0, 1, 1.0}, {1, 0, 1.0}},
    {{0, 1, cplx(0.0, -1.0)}, {1, 0, cplx(0.0, 1.0)}},
    {{0, 0, 1.0}, {1, 1, -1.0}},
}};

const std::vector<SigmaEntry> kDelta = {{0, 0, 1.0}, {1, 1, 1.0}};

double levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

// sum_{ab} c_ab (ad_a psi a_b + sign a_b psi ad_a)
OpWave contract(const Workspace& ws, const std::vector<SigmaEntry>& coeffs, double sign,
                const OpWave& psi) {
  OpWave acc = ws.zero();
  for (const auto& e : coeffs) {
    OpWave t1 = ws.wave(ws.ad(e.alpha).apply_left(ws.a(e.beta).apply_right(psi.mat)));
    OpWave t2 = ws.wave(ws.a(e.beta).apply_left(ws.ad(e.alpha).apply_right(psi.mat)));
    acc = acc + e.c * (t1 + cplx(sign) * t2);
  }
  return acc;
}

OpWave x_sym(const Workspace& ws, int k, const OpWave& psi) {
  return 0.5 * (ws.x_left(k, psi) + ws.x_right(k, psi));
}

OpWave l_hat(const Workspace& ws, int i, const OpWave& psi) {
  return cplx(1.0 / (2.0 * ws.lambda())) * (ws.x_left(i, psi) - ws.x_right(i, psi));
}

OpWave velocity_apply(const Workspace& ws, int i, const OpWave& psi) {
  return cplx(0.0, 0.5) * ws.r_left(-1, contract(ws, kSigma[i], -1.0, psi));
}

OpWave velocity4_apply(const Workspace& ws, const OpWave& psi) {
  return cplx(0.5) * ws.r_left(-1, contract(ws, kDelta, 1.0, psi));
}

OpWave h0_apply(const Workspace& ws, const OpWave& psi) {
  OpWave d = ham::double_commutator(ws, psi);
  return cplx(1.0 / (2.0 * ws.lambda())) * ws.r_left(-1, d);
}

OpWave lrl_apply(const Workspace& ws, int k, double q, const OpWave& psi) {
  OpWave acc = ws.zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double eps = levi_civita(i, j, k);
      if (eps == 0.0) continue;
      acc = acc + cplx(0.5 * eps) * (l_hat(ws, i, velocity_apply(ws, j, psi)) +
                                     velocity_apply(ws, j, l_hat(ws, i, psi)));
    }
  return acc + cplx(q) * x_sym(ws, k, ws.r_sym(-1, psi));
}

OpWave lrl_rewritten_apply(const Workspace& ws, int k, double q, double omega,
                           const OpWave& psi) {
  // (1/(2 r lambda)) (r W'_k - X_k (W' - 2 lambda q)) psi
  OpWave t1 = ws.r_sym(1, w_prime_k(ws, k, omega, psi));
  OpWave t2 = x_sym(ws, k, w_prime(ws, omega, psi) - cplx(2.0 * ws.lambda() * q) * psi);
  return cplx(1.0 / (2.0 * ws.lambda())) * ws.r_sym(-1, t1 - t2);
}

double win_rel(const OpWave& diff, const OpWave& ref, int degree) {
  return std::sqrt(hs_norm_sq_window(diff, degree) / hs_norm_sq_window(ref, degree));
}

}  // namespace

OpWave w_hat(const Workspace& ws, const OpWave& psi) { return contract(ws, kDelta, -1.0, psi); }
OpWave zeta_hat(const Workspace& ws, const OpWave& psi) { return contract(ws, kDelta, 1.0, psi); }
OpWave w_k_hat(const Workspace& ws, int k, const OpWave& psi) {
  return contract(ws, kSigma[k], -1.0, psi);
}
OpWave zeta_k_hat(const Workspace& ws, int k, const OpWave& psi) {
  return contract(ws, kSigma[k], 1.0, psi);
}

OpWave w_cap_k(const Workspace& ws, int k, const OpWave& psi) {
  return cplx(2.0 / ws.lambda()) * x_sym(ws, k, psi) - zeta_k_hat(ws, k, psi);
}

OpWave w_cap(const Workspace& ws, const OpWave& psi) {
  return cplx(2.0 / ws.lambda()) * ws.r_sym(1, psi) - zeta_hat(ws, psi);
}

OpWave w_prime_k(const Workspace& ws, int k, double omega, const OpWave& psi) {
  return w_cap_k(ws, k, psi) + cplx(omega) * x_sym(ws, k, psi);
}

OpWave w_prime(const Workspace& ws, double omega, const OpWave& psi) {
  return w_cap(ws, psi) + cplx(omega) * ws.r_sym(1, psi);
}

SuperOp velocity_superop(const Workspace& ws, int i) {
  SuperOp op;
  op.degree = 2;
  op.label = "V" + std::to_string(i + 1);
  op.action = [&ws, i](const OpWave& p) { return velocity_apply(ws, i, p); };
  return op;
}

SuperOp velocity4_superop(const Workspace& ws) {
  SuperOp op;
  op.degree = 2;
  op.label = "V4";
  op.action = [&ws](const OpWave& p) { return velocity4_apply(ws, p); };
  return op;
}

OpWave leibniz_correction(const Workspace& ws, int i, const OpWave& A, const OpWave& B) {
  // commutators with single ladders, then dense products
  std::array<Mat, 2> ca, da, cb, db;
  for (int a = 0; a < 2; ++a) {
    ca[a] = ws.ad(a).apply_left(A.mat) - ws.ad(a).apply_right(A.mat);  // [ad_a, A]
    da[a] = ws.a(a).apply_left(A.mat) - ws.a(a).apply_right(A.mat);    // [a_a, A]
    cb[a] = ws.ad(a).apply_left(B.mat) - ws.ad(a).apply_right(B.mat);
    db[a] = ws.a(a).apply_left(B.mat) - ws.a(a).apply_right(B.mat);
  }
  Mat acc(ws.dim());
  for (const auto& e : kSigma[i])
    acc += e.c * (matmul(ca[e.alpha], db[e.beta]) - matmul(da[e.beta], cb[e.alpha]));
  return cplx(0.0, -0.5) * ws.r_left(-1, ws.wave(std::move(acc)));
}

std::vector<cplx> potential_diag(const Workspace& ws, double q) {
  std::vector<cplx> d(ws.dim());
  for (std::size_t i = 0; i < ws.dim(); ++i) {
    const int n = ws.space().state(i).total();
    d[i] = -q / (ws.lambda() * double(n + 1));
  }
  return d;
}

std::vector<cplx> potential_d1_diag(const Workspace& ws, double q) {
  const double l = ws.lambda();
  std::vector<cplx> d(ws.dim(), cplx(0.0));
  for (std::size_t i = 0; i < ws.dim(); ++i) {
    const int n = ws.space().state(i).total();
    if (n == 0) continue;  // U(r - lambda) undefined on the innermost shell
    const double up = -q / (l * double(n + 2));
    const double dn = -q / (l * double(n));
    d[i] = (up - dn) / (2.0 * l);
  }
  return d;
}

std::vector<cplx> potential_d2_diag(const Workspace& ws, double q) {
  const double l = ws.lambda();
  std::vector<cplx> d(ws.dim(), cplx(0.0));
  for (std::size_t i = 0; i < ws.dim(); ++i) {
    const int n = ws.space().state(i).total();
    if (n == 0) continue;
    const double up = -q / (l * double(n + 2));
    const double mid = -q / (l * double(n + 1));
    const double dn = -q / (l * double(n));
    d[i] = (up - 2.0 * mid + dn) / (l * l);
  }
  return d;
}

double uncertainty_residual(const Workspace& ws, int i, int j, const OpWave& psi) {
  OpWave lhs = velocity_apply(ws, i, x_sym(ws, j, psi)) - x_sym(ws, j, velocity_apply(ws, i, psi));
  OpWave rhs = ws.zero();
  if (i == j) {
    const double l = ws.lambda();
    rhs = cplx(0.0, -1.0) * (psi - cplx(l * l) * h0_apply(ws, psi));
  }
  return win_rel(lhs - rhs, psi, 4);
}

double velocity_commutator_residual(const Workspace& ws, const OpWave& psi) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      OpWave c = velocity_apply(ws, i, velocity_apply(ws, j, psi)) -
                 velocity_apply(ws, j, velocity_apply(ws, i, psi));
      worst = std::max(worst, win_rel(c, psi, 4));
    }
  return worst;
}

double v2_h0_residual(const Workspace& ws, const OpWave& psi) {
  OpWave v2 = ws.zero();
  for (int i = 0; i < 3; ++i) v2 = v2 + velocity_apply(ws, i, velocity_apply(ws, i, psi));
  OpWave h0 = h0_apply(ws, psi);
  const double l = ws.lambda();
  OpWave rhs = h0 - cplx(0.5 * l * l) * h0_apply(ws, h0);
  return win_rel(cplx(0.5) * v2 - rhs, psi, 4);
}

double E4Report::worst() const {
  return std::max({lab_algebra, v_commutators, covariance, casimir2, lubanski, v4_consistency});
}

E4Report e4_symmetry_suite(const Workspace& ws, const OpWave& psi) {
  E4Report rep;
  const double l = ws.lambda();
  const int win = 4;

  auto rel = [&](const OpWave& d) { return win_rel(d, psi, win); };

  // SO(4) generator algebra through the L_i / X_i components
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      OpWave ll = l_hat(ws, i, l_hat(ws, j, psi)) - l_hat(ws, j, l_hat(ws, i, psi));
      OpWave lx = l_hat(ws, i, x_sym(ws, j, psi)) - x_sym(ws, j, l_hat(ws, i, psi));
      OpWave xx = x_sym(ws, i, x_sym(ws, j, psi)) - x_sym(ws, j, x_sym(ws, i, psi));
      OpWave ll_rhs = ws.zero(), lx_rhs = ws.zero(), xx_rhs = ws.zero();
      for (int k = 0; k < 3; ++k) {
        const double eps = levi_civita(i, j, k);
        if (eps == 0.0) continue;
        ll_rhs = ll_rhs + cplx(0.0, eps) * l_hat(ws, k, psi);
        lx_rhs = lx_rhs + cplx(0.0, eps) * x_sym(ws, k, psi);
        xx_rhs = xx_rhs + cplx(0.0, eps * l * l) * l_hat(ws, k, psi);
      }
      rep.lab_algebra = std::max({rep.lab_algebra, rel(ll - ll_rhs), rel(lx - lx_rhs),
                                  rel(xx - xx_rhs)});
    }

  // velocity four-vector: vanishing commutators and covariance
  std::array<OpWave, 4> v = {velocity_apply(ws, 0, psi), velocity_apply(ws, 1, psi),
                             velocity_apply(ws, 2, psi), velocity4_apply(ws, psi)};
  auto v_apply = [&](int a, const OpWave& p) {
    return a < 3 ? velocity_apply(ws, a, p) : velocity4_apply(ws, p);
  };
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      OpWave c = v_apply(a, v[b]) - v_apply(b, v[a]);
      rep.v_commutators = std::max(rep.v_commutators, rel(c));
    }
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // [L_i, V_j] = i eps_ijk V_k
      OpWave c = l_hat(ws, i, v[j]) - velocity_apply(ws, j, l_hat(ws, i, psi));
      OpWave rhs = ws.zero();
      for (int k = 0; k < 3; ++k) {
        const double eps = levi_civita(i, j, k);
        if (eps != 0.0) rhs = rhs + cplx(0.0, eps) * v[k];
      }
      rep.covariance = std::max(rep.covariance, rel(c - rhs));
      // [X_i, V_j] = i lambda delta_ij V_4
      OpWave cx = x_sym(ws, i, v[j]) - velocity_apply(ws, j, x_sym(ws, i, psi));
      OpWave rhsx = i == j ? cplx(0.0, l) * v[3] : ws.zero();
      rep.covariance = std::max(rep.covariance, rel(cx - rhsx));
    }
    // [L_i, V_4] = 0 and [X_i, V_4] = -i lambda V_i
    OpWave c4 = l_hat(ws, i, v[3]) - velocity4_apply(ws, l_hat(ws, i, psi));
    rep.covariance = std::max(rep.covariance, rel(c4));
    OpWave cx4 = x_sym(ws, i, v[3]) - velocity4_apply(ws, x_sym(ws, i, psi));
    rep.covariance = std::max(rep.covariance, rel(cx4 + cplx(0.0, l) * v[i]));
  }

  // quadratic Casimir V_a V_a = 1/lambda^2
  OpWave c2 = ws.zero();
  for (int a = 0; a < 4; ++a) c2 = c2 + v_apply(a, v[a]);
  rep.casimir2 = rel(c2 - cplx(1.0 / (l * l)) * psi);

  // Pauli-Lubanski components vanish
  OpWave lam4 = ws.zero();
  for (int j = 0; j < 3; ++j) lam4 = lam4 + l_hat(ws, j, v[j]);
  rep.lubanski = rel(lam4);
  for (int i = 0; i < 3; ++i) {
    OpWave lam = velocity4_apply(ws, l_hat(ws, i, psi));
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const double eps = levi_civita(i, j, k);
        if (eps != 0.0)
          lam = lam + cplx(eps / l) * velocity_apply(ws, j, x_sym(ws, k, psi));
      }
    rep.lubanski = std::max(rep.lubanski, rel(lam));
  }

  // V_4 + lambda H_0 = 1/lambda
  OpWave cons = v[3] + cplx(l) * h0_apply(ws, psi) - cplx(1.0 / l) * psi;
  rep.v4_consistency = rel(cons);
  return rep;
}

double ehrenfest_residual(const Workspace& ws, double q, const OpWave& psi) {
  const double l = ws.lambda();
  const auto u = potential_diag(ws, q);
  const auto u1 = potential_d1_diag(ws, q);
  const auto u2 = potential_d2_diag(ws, q);

  const int lo = 1;                       // vacuum block excluded
  const int hi = ws.n_max() - 6;          // clear of the truncation boundary
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    OpWave upsi = ws.wave(diag_left(u, psi.mat));
    OpWave lhs = cplx(0.0, -1.0) *
                 (velocity_apply(ws, i, upsi) - ws.wave(diag_left(u, velocity_apply(ws, i, psi).mat)));

    // -i (V_i U) as an operator product on psi
    OpWave u_wave = ws.radial_wave([&](int n) { return cplx(-q / (l * double(n + 1))); });
    OpWave grad_u = velocity_apply(ws, i, u_wave);
    OpWave term_a = cplx(0.0, -1.0) * ws.wave(matmul(grad_u.mat, psi.mat));

    // Measured operator identity (exact on balanced states, blocks N >= 1):
    //   -i[V_i, U] = -i(V_i U) + U'_l(r) [ (l/r) L_i + (l/2r) W_i ]
    //                - i (l^2/2) U''_l(r) V_i
    // with W_i the bare sigma-contracted double-ladder combination.
    OpWave bracket = cplx(l) * ws.r_left(-1, l_hat(ws, i, psi)) +
                     cplx(0.5 * l) * ws.r_left(-1, w_cap_k(ws, i, psi));
    OpWave term_b = ws.wave(diag_left(u1, bracket.mat));
    OpWave term_c =
        cplx(0.0, -0.5 * l * l) * ws.wave(diag_left(u2, velocity_apply(ws, i, psi).mat));

    OpWave diff = lhs - (term_a + term_b + term_c);
    const double num = hs_norm_sq_band(diff, lo, hi);
    const double den = hs_norm_sq_band(psi, lo, hi);
    worst = std::max(worst, std::sqrt(num / den));
  }
  return worst;
}

SuperOp lrl_superop(const Workspace& ws, int k, double q) {
  SuperOp op;
  op.degree = 4;
  op.label = "A" + std::to_string(k + 1);
  op.action = [&ws, k, q](const OpWave& p) { return lrl_apply(ws, k, q, p); };
  return op;
}

SuperOp lrl_superop_rewritten(const Workspace& ws, int k, double q, double energy) {
  SuperOp op;
  op.degree = 4;
  op.label = "A" + std::to_string(k + 1) + "'";
  const double omega = -2.0 * ws.lambda() * energy;
  op.action = [&ws, k, q, omega](const OpWave& p) {
    return lrl_rewritten_apply(ws, k, q, omega, p);
  };
  return op;
}

double SymmetryVerdict::worst() const {
  return std::max({eigen_gate, conservation, lrl_forms, on_shell_w_prime, algebra_aa, algebra_la,
                   casimir1, casimir2_residual});
}

SymmetryVerdict lrl_algebra_suite(const Workspace& ws, double energy, double q,
                                  const std::vector<OpWave>& states) {
  SymmetryVerdict v;
  const double l = ws.lambda();
  v.energy = energy;
  v.factor = -2.0 * energy + l * l * energy * energy;
  const double scale = 2.0 * std::abs(energy) + l * l * energy * energy + 1e-300;
  if (v.factor > 1e-12 * scale)
    v.algebra = SymmetryVerdict::Algebra::so4;
  else if (v.factor < -1e-12 * scale)
    v.algebra = SymmetryVerdict::Algebra::so31;
  else
    v.algebra = SymmetryVerdict::Algebra::e3;

  const double omega = -2.0 * l * energy;
  ham::SuperOp h = ham::hamiltonian_superop(ws, q);

  // The direct symmetrized construction is checked against the rewritten
  // W'-form once per state; the repeated algebra applications then use the
  // cheaper rewritten form.
  auto a_fast = [&](int k, const OpWave& p) { return lrl_rewritten_apply(ws, k, q, omega, p); };

  double c2_value_acc = 0.0;
  for (const auto& psi : states) {
    OpWave hpsi = h(psi);
    v.eigen_gate = std::max(v.eigen_gate, win_rel(hpsi - cplx(energy) * psi, psi, 2));

    std::array<OpWave, 3> apsi = {lrl_apply(ws, 0, q, psi), lrl_apply(ws, 1, q, psi),
                                  lrl_apply(ws, 2, q, psi)};
    for (int k = 0; k < 3; ++k) {
      // conservation on the eigenstate
      OpWave comm = a_fast(k, hpsi) - h(apsi[k]);
      v.conservation = std::max(v.conservation, win_rel(comm, psi, 8));
      // direct vs rewritten construction (any balanced state)
      OpWave rew = a_fast(k, psi);
      v.lrl_forms = std::max(v.lrl_forms, win_rel(apsi[k] - rew, psi, 6));
      // on-shell reduction A_k = W'_k / (2 lambda)
      OpWave wp = cplx(1.0 / (2.0 * l)) * w_prime_k(ws, k, omega, psi);
      v.on_shell_w_prime = std::max(v.on_shell_w_prime, win_rel(apsi[k] - wp, psi, 6));
    }

    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        OpWave comm = a_fast(i, apsi[j]) - a_fast(j, apsi[i]);
        OpWave rhs = ws.zero();
        for (int k = 0; k < 3; ++k) {
          const double eps = levi_civita(i, j, k);
          if (eps != 0.0) rhs = rhs + cplx(0.0, eps * v.factor) * l_hat(ws, k, psi);
        }
        v.algebra_aa = std::max(v.algebra_aa, win_rel(comm - rhs, psi, 10));
      }

    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        OpWave comm = l_hat(ws, i, apsi[j]) - a_fast(j, l_hat(ws, i, psi));
        OpWave rhs = ws.zero();
        for (int k = 0; k < 3; ++k) {
          const double eps = levi_civita(i, j, k);
          if (eps != 0.0) rhs = rhs + cplx(0.0, eps) * apsi[k];
        }
        v.algebra_la = std::max(v.algebra_la, win_rel(comm - rhs, psi, 8));
      }

    OpWave c1 = ws.zero();
    for (int k = 0; k < 3; ++k) c1 = c1 + l_hat(ws, k, apsi[k]);
    v.casimir1 = std::max(v.casimir1, win_rel(c1, psi, 6));

    OpWave c2 = ws.zero();
    for (int k = 0; k < 3; ++k) c2 = c2 + a_fast(k, apsi[k]);
    OpWave ll = ws.zero();
    for (int k = 0; k < 3; ++k) ll = ll + l_hat(ws, k, l_hat(ws, k, psi));
    c2 = c2 + cplx(v.factor) * (ll + psi);
    // windowed value estimate: scattering states carry weight all the way to
    // the truncation boundary, so the full-space pairing would be biased
    {
      const int cut = ws.n_max() - 10;
      cplx num = 0.0;
      double den = 0.0;
      const auto& sp = ws.space();
      for (std::size_t col = 0; col < ws.dim(); ++col) {
        if (sp.state(col).total() > cut) continue;
        const double w = double(sp.state(col).total() + 1);
        for (std::size_t row = 0; row < ws.dim(); ++row) {
          if (sp.state(row).total() > cut) continue;
          num += w * std::conj(psi.mat(row, col)) * c2.mat(row, col);
          den += w * std::norm(psi.mat(row, col));
        }
      }
      c2_value_acc += (num / den).real();
    }
    v.casimir2_residual =
        std::max(v.casimir2_residual, win_rel(c2 - cplx(q * q) * psi, psi, 10));
  }
  v.casimir2_value = states.empty() ? 0.0 : c2_value_acc / double(states.size());
  return v;
}

std::pair<double, double> spectrum_from_symmetry(double q, double lambda, int n) {
  if (n < 1) throw std::invalid_argument("spectrum_from_symmetry: n must be >= 1");
  return ham::energy_pair(q * lambda / double(n), lambda);
}

}  // namespace ncqm::dyn
