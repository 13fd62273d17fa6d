#include "ncqm/suites.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "ncqm/dynamics.hpp"
#include "ncqm/fock.hpp"
#include "ncqm/hamiltonian.hpp"
#include "ncqm/ordering.hpp"
#include "ncqm/rng.hpp"
#include "ncqm/scattering.hpp"
#include "ncqm/specfun.hpp"

namespace ncqm::suites {

using opwave::hs_norm_sq_window;
using opwave::max_abs_entry_window;
using opwave::OpWave;
using opwave::Workspace;

CheckRow make_row(std::string anchor, std::string description, double residual, double tolerance) {
  CheckRow r;
  r.anchor = std::move(anchor);
  r.description = std::move(description);
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = residual <= tolerance;
  return r;
}

bool all_pass(const std::vector<CheckRow>& rows) {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

namespace {

double levi(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  return ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
}

OpWave unit_random(const Workspace& ws, Rng& rng) {
  OpWave p = ws.random_balanced(rng);
  return cplx(1.0 / max_abs(p.mat)) * p;
}

// || lhs - rhs || / (|| lhs || + || rhs || + eps), windowed
double rel_pair(const OpWave& lhs, const OpWave& rhs, int win) {
  const double den =
      std::sqrt(hs_norm_sq_window(lhs, win)) + std::sqrt(hs_norm_sq_window(rhs, win)) + 1e-300;
  return std::sqrt(hs_norm_sq_window(lhs - rhs, win)) / den;
}

double rel_to(const OpWave& diff, const OpWave& ref, int win) {
  return std::sqrt(hs_norm_sq_window(diff, win) / hs_norm_sq_window(ref, win));
}

}  // namespace

std::vector<CheckRow> algebra_suite(const SuiteConfig& cfg) {
  std::vector<CheckRow> rows;
  const double l = cfg.lambda;
  Workspace ws(cfg.n_max, l);
  const auto& sp = ws.space();
  Rng rng(cfg.seed);

  // ladder matrices and canonical commutators, entrywise on the window
  {
    Mat a[2] = {ws.a(0).to_dense(), ws.a(1).to_dense()};
    Mat ad[2] = {ws.ad(0).to_dense(), ws.ad(1).to_dense()};
    auto keep = fock::window_mask(sp, 1);
    Mat id = Mat::identity(sp.dim());
    Mat zero(sp.dim());
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Mat c = matmul(a[i], ad[j]) - matmul(ad[j], a[i]);
        worst = std::max(worst, max_abs_diff(c, i == j ? id : zero, keep));
        Mat c2 = matmul(a[i], a[j]) - matmul(a[j], a[i]);
        worst = std::max(worst, max_abs_diff(c2, zero, keep));
        Mat c3 = matmul(ad[i], ad[j]) - matmul(ad[j], ad[i]);
        worst = std::max(worst, max_abs_diff(c3, zero, keep));
      }
    rows.push_back(make_row("2.2", "canonical ladder commutators on the window", worst, 1e-12));

    double adj = 0.0;
    for (int i = 0; i < 2; ++i) adj = std::max(adj, max_abs(ad[i] - dagger(a[i])));
    rows.push_back(make_row("2.2-adjoint", "creation = adjoint of annihilation", adj, 1e-14));

    Mat nsum = matmul(ad[0], a[0]) + matmul(ad[1], a[1]);
    Mat nmat(sp.dim());
    for (std::size_t i = 0; i < sp.dim(); ++i) nmat(i, i) = double(sp.state(i).total());
    rows.push_back(
        make_row("2.2-number", "N = sum of a^d a", max_abs_diff(nsum, nmat, keep), 1e-12));
  }

  // coordinate algebra, matrix level (exact on the full truncated space)
  {
    Mat x[3] = {ws.x(0).to_dense(), ws.x(1).to_dense(), ws.x(2).to_dense()};
    std::vector<bool> keep(sp.dim(), true);
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Mat c = matmul(x[i], x[j]) - matmul(x[j], x[i]);
        Mat rhs(sp.dim());
        for (int k = 0; k < 3; ++k)
          if (levi(i, j, k) != 0.0) rhs += cplx(0.0, 2.0 * l * levi(i, j, k)) * x[k];
        worst = std::max(worst, max_abs_diff(c, rhs, keep));
      }
    rows.push_back(make_row("2.1", "coordinate commutators 2 i lambda eps x", worst, 1e-12));

    Mat x2(sp.dim());
    for (int j = 0; j < 3; ++j) x2 += matmul(x[j], x[j]);
    Mat r2(sp.dim());
    auto rd = ws.r_pow_diag(2);
    for (std::size_t i = 0; i < sp.dim(); ++i) r2(i, i) = rd[i] - l * l;
    double sphere = max_abs_diff(x2, r2, keep);
    Mat rmat(sp.dim());
    auto r1 = ws.r_pow_diag(1);
    for (std::size_t i = 0; i < sp.dim(); ++i) rmat(i, i) = r1[i];
    for (int i = 0; i < 3; ++i) {
      Mat c = matmul(x[i], rmat) - matmul(rmat, x[i]);
      sphere = std::max(sphere, max_abs(c));
    }
    rows.push_back(make_row("2.5", "r commutes with x; r^2 - x^2 = lambda^2", sphere, 1e-12));
  }

  // super-operator level rows on seeded random balanced states
  auto L = [&](int i, const OpWave& p) {
    return cplx(1.0 / (2.0 * l)) * (ws.x_left(i, p) - ws.x_right(i, p));
  };
  double r42 = 0.0, r512 = 0.0, r67 = 0.0, rlr = 0.0, rright = 0.0;
  for (int s = 0; s < cfg.samples; ++s) {
    OpWave psi = unit_random(ws, rng);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        OpWave c = L(i, L(j, psi)) - L(j, L(i, psi));
        OpWave rhs = ws.zero();
        for (int k = 0; k < 3; ++k)
          if (levi(i, j, k) != 0.0) rhs = rhs + cplx(0.0, levi(i, j, k)) * L(k, psi);
        r42 = std::max(r42, max_abs_entry_window(c - rhs, 4));

        OpWave cr = ws.x_right(i, ws.x_right(j, psi)) - ws.x_right(j, ws.x_right(i, psi));
        OpWave rhsr = ws.zero();
        for (int k = 0; k < 3; ++k)
          if (levi(i, j, k) != 0.0)
            rhsr = rhsr + cplx(0.0, -2.0 * l * levi(i, j, k)) * ws.x_right(k, psi);
        rright = std::max(rright, max_abs_entry_window(cr - rhsr, 4));
      }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        auto vj = dyn::velocity_superop(ws, j);
        OpWave c = L(i, vj(psi)) - vj(L(i, psi));
        OpWave rhs = ws.zero();
        for (int k = 0; k < 3; ++k)
          if (levi(i, j, k) != 0.0) {
            auto vk = dyn::velocity_superop(ws, k);
            rhs = rhs + cplx(0.0, levi(i, j, k)) * vk(psi);
          }
        r512 = std::max(r512, max_abs_entry_window(c - rhs, 6));
        OpWave clr = ws.x_left(i, ws.x_right(j, psi)) - ws.x_right(j, ws.x_left(i, psi));
        rlr = std::max(rlr, max_abs_entry_window(clr, 4));
      }
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        OpWave c1 = ws.a_hat(a, ws.ad_hat(b, psi)) - ws.ad_hat(b, ws.a_hat(a, psi));
        OpWave w1 = c1 - (a == b ? psi : ws.zero());
        OpWave c2 = ws.b_hat(a, ws.bd_hat(b, psi)) - ws.bd_hat(b, ws.b_hat(a, psi));
        OpWave w2 = c2 + (a == b ? psi : ws.zero());
        OpWave c3 = ws.a_hat(a, ws.bd_hat(b, psi)) - ws.bd_hat(b, ws.a_hat(a, psi));
        r67 = std::max({r67, max_abs_entry_window(w1, 2), max_abs_entry_window(w2, 2),
                        max_abs_entry_window(c3, 2)});
      }
  }
  rows.push_back(make_row("4.2", "orbital momentum so(3) algebra", r42, 1e-12));
  rows.push_back(make_row("5.12", "velocity transforms as a vector", r512, 1e-12));
  rows.push_back(make_row("6.7", "hatted left/right ladder commutators", r67, 1e-12));
  rows.push_back(make_row("E.lr", "left and right coordinate actions commute", rlr, 1e-12));
  rows.push_back(
      make_row("E.right", "right coordinate algebra carries the minus sign", rright, 1e-12));
  return rows;
}

std::vector<CheckRow> ordering_suite(const SuiteConfig& cfg) {
  using namespace ordering;
  std::vector<CheckRow> rows;
  Rng rng(cfg.seed);

  // exact two-mode ladder-product oracle for the normal powers
  {
    long mismatches = 0;
    double fp = 0.0;
    for (int n = 0; n <= 30; ++n)
      for (int k = 0; k <= n; ++k) {
        const BigInt expect = falling_factorial_int(n, k);
        for (int n1 : {0, n / 2, n}) {
          BigInt sum(0);
          for (int j = 0; j <= k; ++j)
            sum += binomial_int(k, j) * falling_factorial_int(n1, j) *
                   falling_factorial_int(n - n1, k - j);
          if (!(sum == expect)) ++mismatches;
        }
        const double want = expect.to_double();
        if (want > 0.0)
          fp = std::max(fp, std::abs(normal_power_eigenvalue(k, n, 1.0) - want) / want);
      }
    rows.push_back(make_row("2.9", "normal powers equal ladder products (exact integers)",
                            double(mismatches), 0.0));
    rows.push_back(make_row("2.9-fp", "floating normal powers track the integers", fp, 1e-13));
  }
  {
    double worst = 0.0;
    for (int n = 0; n <= 20; ++n)
      for (int m = 1; m <= 4; ++m) {
        const double got = normal_power_eigenvalue(-m, n, 0.5);
        double exact = std::pow(0.5, -m);
        for (int i = 1; i <= m; ++i) exact /= double(n + i);
        worst = std::max(worst, std::abs(got - exact) / exact);
      }
    rows.push_back(make_row("2.10", "negative normal powers", worst, 1e-13));
  }
  {
    long bad = 0;
    for (int n = 0; n <= 25; ++n)
      for (std::int64_t x = -3; x <= 8; ++x) {
        BigInt lhs(0), xp(1);
        for (int k = 0; k <= n; ++k) {
          lhs += stirling_first(n, k) * xp;
          xp *= BigInt(x);
        }
        if (!(lhs == falling_factorial_at(x, n))) ++bad;
      }
    rows.push_back(make_row("2.3.1", "Stirling numbers resum the falling factorial (exact)",
                            double(bad), 0.0));
  }
  {
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      NormalPolySeries s;
      s.lambda = rng.uniform(0.2, 1.0);
      s.coeffs.resize(6);
      for (auto& c : s.coeffs) c = rng.complex_box();
      OrdinaryPoly p = normal_to_ordinary(s);
      for (int n = 0; n <= 12; ++n) {
        cplx direct = 0.0;
        for (std::size_t k = 0; k < s.coeffs.size(); ++k)
          direct += s.coeffs[k] * normal_power_eigenvalue(int(k), n, s.lambda);
        worst =
            std::max(worst, std::abs(p.eval(s.lambda * n) - direct) / (1.0 + std::abs(direct)));
      }
    }
    rows.push_back(
        make_row("2.3.1-conv", "normal-to-ordinary conversion evaluates equal", worst, 1e-12));
  }
  {
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const cplx beta(rng.uniform(0.0, 1.0), rng.uniform(-1.0, 1.0));
      const double lam = rng.uniform(0.05, 0.3);
      const int n = 1 + int(rng.uniform01() * 19.0);
      const cplx closed = normal_exponential(beta, n, lam);
      worst = std::max(
          worst, std::abs(closed - normal_exponential_series(beta, n, lam)) / std::abs(closed));
    }
    rows.push_back(
        make_row("2.11", "normal-ordered exponential equals its finite sum", worst, 1e-13));
  }
  {
    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
      const int m = int(rng.uniform(-3.0, 4.0));
      const cplx beta(rng.uniform(0.0, 1.0), rng.uniform(-0.5, 0.5));
      const double lam = rng.uniform(0.1, 0.4);
      const int n = 1 + int(rng.uniform01() * 12.0);
      const cplx closed = normal_power_times_exponential(m, beta, n, lam);
      const cplx series = normal_power_times_exponential_series(m, beta, n, lam);
      worst = std::max(worst, std::abs(closed - series) / (1.0 + std::abs(closed)));
    }
    rows.push_back(
        make_row("B.power-exp", "normal power times exponential closed forms", worst, 1e-12));
  }
  return rows;
}

std::vector<CheckRow> specfun_suite(const SuiteConfig& cfg) {
  using namespace specfun;
  std::vector<CheckRow> rows;
  Rng rng(cfg.seed);

  {
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const cplx a(rng.uniform(-2.0, 3.0), rng.uniform(-0.5, 0.5));
      const cplx c(rng.uniform(0.6, 4.0), rng.uniform(-0.5, 0.5));
      const cplx x(rng.uniform(-1.0, 1.0), rng.uniform(-0.5, 0.5));
      worst = std::max(worst, kummer_residual(a, c, x));
    }
    rows.push_back(make_row("4.28", "Kummer identity on a 100-point grid", worst, 1e-12));
  }
  {
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const cplx z(rng.uniform(0.7, 8.0), rng.uniform(-50.0, 50.0));
      worst =
          std::max(worst, std::abs(std::exp(log_gamma(z + 1.0) - log_gamma(z)) - z) / std::abs(z));
    }
    rows.push_back(make_row("gamma-rec", "log-gamma recurrence", worst, 1e-12));
    double conj_worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const cplx z(rng.uniform(0.7, 6.0), rng.uniform(0.1, 30.0));
      conj_worst =
          std::max(conj_worst, std::abs(log_gamma(std::conj(z)) - std::conj(log_gamma(z))));
    }
    rows.push_back(make_row("gamma-conj", "conjugation symmetry of log-gamma", conj_worst, 1e-13));
  }
  {
    const double r3 = confluent_limit_residual(0.5, 1.5, 0.3, 1e3);
    const double r4 = confluent_limit_residual(0.5, 1.5, 0.3, 1e4);
    const double rate = std::log(r3 / r4) / std::log(10.0);
    rows.push_back(
        make_row("4.33", "confluent limit formula decays like 1/b", std::abs(rate - 1.0), 0.2));
  }
  {
    const cplx x(0.3, 0.2);
    rows.push_back(make_row("4.25", "1F1(a;a;x) = exp(x)",
                            std::abs(hyp1f1(1.7, 1.7, x) - std::exp(x)) / std::abs(std::exp(x)),
                            1e-13));
    rows.push_back(
        make_row("4.30", "2F1 log and binomial reductions",
                 std::max(std::abs(hyp2f1(1.0, 1.0, 2.0, 0.5) - cplx(2.0 * std::log(2.0))),
                          std::abs(hyp2f1(0.4, 2.2, 2.2, 0.3) - std::pow(cplx(0.7), -0.4))),
                 1e-12));
    rows.push_back(make_row("4.35", "Bessel J0 at 2",
                            std::abs(bessel_j(0.0, 2.0) - cplx(0.22389077914123567)), 1e-13));
    rows.push_back(make_row("4.32", "Euler transformation inside the disk",
                            euler_transform_residual(0.3, 0.7, 1.9, 0.4), 1e-12));
  }
  {
    GeneralSecondOrderEq eq;
    eq.a1 = -1.0;
    eq.b1 = 2.3;
    eq.a2 = 0.0;
    eq.b2 = -0.8;
    auto plus = reduce_general_equation(eq, +1);
    auto minus = reduce_general_equation(eq, -1);
    double worst = 0.0;
    for (double x = 0.1; x < 1.0; x += 0.2) {
      const cplx direct = hyp1f1(0.8, 2.3, x);
      worst = std::max(worst, std::abs(plus.eval_regular(x) - direct) / std::abs(direct));
      worst = std::max(worst, std::abs(minus.eval_regular(x) - direct) / std::abs(direct));
    }
    rows.push_back(
        make_row("4.37", "general second-order reduction, both D branches", worst, 1e-12));
  }
  {
    double worst = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
      const int bign = 1 + int(rng.uniform01() * 59.0);
      const int a = 1 + int(rng.uniform01() * 4.0);
      const int c = 2 + int(rng.uniform01() * 5.0);
      const double x = rng.uniform(-0.9, -0.05);
      long double sum = 0.0L;
      for (int m = 0; m <= bign; ++m) {
        long double pn = 1.0L, pa = 1.0L, pc = 1.0L, fact = 1.0L;
        for (int i = 0; i < m; ++i) {
          pn *= (-bign + i);
          pa *= (a + i);
          pc *= (c + i);
          fact *= (i + 1);
        }
        sum += pa * pn / (pc * fact) * std::pow((long double)x, m);
      }
      const cplx got = hyp2f1(double(a), double(-bign), double(c), x);
      worst = std::max(worst, std::abs(got - cplx(double(sum))) / (1.0 + std::abs(got)));
    }
    rows.push_back(
        make_row("2F1-poly", "terminating 2F1 equals exact Pochhammer sums", worst, 1e-12));
  }
  return rows;
}

std::vector<CheckRow> dynamics_suite(const SuiteConfig& cfg) {
  std::vector<CheckRow> rows;
  Workspace ws(cfg.n_max, cfg.lambda);
  Rng rng(cfg.seed);
  const double l = cfg.lambda;

  std::vector<OpWave> states;
  for (int s = 0; s < cfg.samples; ++s) states.push_back(unit_random(ws, rng));

  {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        auto v = dyn::velocity_superop(ws, i);
        OpWave got = v(ws.x_wave(j));
        OpWave want = i == j ? cplx(0.0, -1.0) * ws.identity_wave() : ws.zero();
        worst = std::max(worst, max_abs_entry_window(got - want, 4));
      }
    rows.push_back(make_row("5.7", "velocity of x is -i delta", worst, 1e-12));
  }
  {
    auto v = dyn::velocity_superop(ws, 1);
    OpWave r2 = ws.radial_wave([&](int n) {
      const double r = l * (n + 1);
      return cplx(r * r);
    });
    OpWave got = v(r2);
    OpWave want = cplx(0.0, -2.0) * ws.x_wave(1);
    rows.push_back(make_row("5.8", "gradient difference quotient on r^2",
                            max_abs_entry_window(got - want, 4), 1e-12));
  }
  {
    double worst = 0.0;
    OpWave a = unit_random(ws, rng), b = unit_random(ws, rng);
    for (int i = 0; i < 3; ++i) {
      auto v = dyn::velocity_superop(ws, i);
      OpWave prod = ws.wave(matmul(a.mat, b.mat));
      OpWave lhs = v(prod);
      OpWave rhs = ws.wave(matmul(v(a).mat, b.mat)) + ws.wave(matmul(a.mat, v(b).mat)) +
                   dyn::leibniz_correction(ws, i, a, b);
      worst = std::max(worst, rel_pair(lhs, rhs, 6));
    }
    rows.push_back(make_row("5.10", "deformed Leibniz rule", worst, 1e-10));
  }
  {
    double worst = 0.0;
    auto h0 = ham::hamiltonian_superop(ws, 0.0);
    for (const auto& psi : states) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          OpWave k1 = dyn::leibniz_correction(ws, i, ws.x_wave(j), psi);
          OpWave k2 = dyn::leibniz_correction(ws, i, psi, ws.x_wave(j));
          OpWave lhs = cplx(0.5) * (k1 + k2);
          OpWave rhs = i == j ? cplx(0.0, l * l) * h0(psi) : ws.zero();
          worst = std::max(worst, rel_to(lhs - rhs, psi, 6));
        }
    }
    rows.push_back(
        make_row("8.26", "coordinate corrections resum the free Hamiltonian", worst, 1e-10));
  }
  {
    double u = 0.0, v = 0.0, w = 0.0;
    for (const auto& psi : states) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) u = std::max(u, dyn::uncertainty_residual(ws, i, j, psi));
      v = std::max(v, dyn::velocity_commutator_residual(ws, psi));
      w = std::max(w, dyn::v2_h0_residual(ws, psi));
    }
    rows.push_back(make_row("5.15", "uncertainty relation with the energy correction", u, 1e-10));
    rows.push_back(make_row("5.17", "velocity components commute", v, 1e-10));
    rows.push_back(make_row("5.21", "velocity squared against the free Hamiltonian", w, 1e-10));
  }
  {
    double lab = 0.0, vcom = 0.0, cov = 0.0, cas = 0.0, lub = 0.0, v4 = 0.0;
    for (const auto& psi : states) {
      auto rep = dyn::e4_symmetry_suite(ws, psi);
      lab = std::max(lab, rep.lab_algebra);
      vcom = std::max(vcom, rep.v_commutators);
      cov = std::max(cov, rep.covariance);
      cas = std::max(cas, rep.casimir2);
      lub = std::max(lub, rep.lubanski);
      v4 = std::max(v4, rep.v4_consistency);
    }
    rows.push_back(make_row("5.25", "SO(4) labelled generator algebra", lab, 1e-10));
    rows.push_back(make_row("5.27", "velocity four-vector commutators and covariance",
                            std::max(vcom, cov), 1e-10));
    rows.push_back(make_row("5.26", "V4 completes the velocity four-vector", v4, 1e-10));
    rows.push_back(make_row("5.28", "quadratic E(4) Casimir equals 1/lambda^2", cas, 1e-10));
    rows.push_back(make_row("5.30", "Pauli-Lubanski components vanish", lub, 1e-10));
  }
  {
    double worst = 0.0;
    for (const auto& psi : states) worst = std::max(worst, dyn::ehrenfest_residual(ws, cfg.q, psi));
    rows.push_back(make_row("5.34", "Ehrenfest theorem for the Coulomb potential", worst, 1e-10));
  }
  {
    const auto& sp = ws.space();
    auto keep = fock::window_mask(sp, 1);
    double worst = 0.0;
    for (int k = 1; k <= 3; ++k) {
      Mat rk(sp.dim()), rkp(sp.dim()), rkm(sp.dim());
      for (std::size_t i = 0; i < sp.dim(); ++i) {
        const double r = l * (sp.state(i).total() + 1);
        rk(i, i) = std::pow(r, k);
        rkp(i, i) = std::pow(r + l, k);
        rkm(i, i) = std::pow(r - l, k);
      }
      for (int al = 0; al < 2; ++al) {
        Mat a = ws.a(al).to_dense(), ad = ws.ad(al).to_dense();
        worst = std::max(worst, max_abs_diff(matmul(a, rk), matmul(rkp, a), keep));
        worst = std::max(worst, max_abs_diff(matmul(ad, rk), matmul(rkm, ad), keep));
      }
    }
    rows.push_back(make_row("8.29", "ladders shift radial powers by lambda", worst, 1e-10));
  }
  return rows;
}

namespace {

// Appendix ledger: every identity as a windowed super-operator residual on
// seeded random balanced states.
void append_appendix_rows(std::vector<CheckRow>& rows, const SuiteConfig& cfg) {
  Workspace ws(cfg.n_max, cfg.lambda);
  Rng rng(cfg.seed + 1);
  const double l = cfg.lambda;
  const double energy = 0.37 * ham::e_crit(l);
  const double omega = -2.0 * l * energy;
  const double eta = 2.0 / l + omega;

  auto L = [&](int i, const OpWave& p) {
    return cplx(1.0 / (2.0 * l)) * (ws.x_left(i, p) - ws.x_right(i, p));
  };
  auto X = [&](int k, const OpWave& p) { return 0.5 * (ws.x_left(k, p) + ws.x_right(k, p)); };
  auto V = [&](int k, const OpWave& p) {
    auto v = dyn::velocity_superop(ws, k);
    return v(p);
  };

  struct Acc {
    double v = 0.0;
    void take(double r) { v = std::max(v, r); }
  };
  Acc a40, a41, a42, a43, a44, a45, a46, a47, a48, a49, a51, a52, a53, a54, a62, a63a, a63b, a64;
  const int win = 6;

  for (int s = 0; s < cfg.samples; ++s) {
    OpWave psi = unit_random(ws, rng);

    OpWave z_psi = dyn::zeta_hat(ws, psi);
    OpWave w_psi = dyn::w_hat(ws, psi);
    for (int k = 0; k < 3; ++k) {
      OpWave zk = dyn::zeta_k_hat(ws, k, psi);
      OpWave rhs = cplx(0.0, 2.0 * l) * ws.r_sym(1, V(k, psi));
      OpWave c1 = dyn::zeta_hat(ws, X(k, psi)) - X(k, z_psi);
      OpWave c2 = dyn::zeta_k_hat(ws, k, ws.r_sym(1, psi)) - ws.r_sym(1, zk);
      a40.take(rel_pair(c1, rhs, win));
      a40.take(rel_pair(c2, rhs, win));
      OpWave c3 = dyn::zeta_hat(ws, zk) - dyn::zeta_k_hat(ws, k, z_psi);
      a41.take(rel_to(c3, psi, win) * l * l / 4.0);
      OpWave c4 = dyn::w_prime(ws, omega, dyn::w_prime_k(ws, k, omega, psi)) -
                  dyn::w_prime_k(ws, k, omega, dyn::w_prime(ws, omega, psi));
      a42.take(rel_to(c4, psi, win) / (eta * eta * l * double(cfg.n_max) + 1.0));
      for (int i = 0; i < 3; ++i) {
        if (i == k) continue;  // 0 = 0 components live in the contracted rows
        OpWave cz = L(i, zk) - dyn::zeta_k_hat(ws, k, L(i, psi));
        OpWave cx = L(i, X(k, psi)) - X(k, L(i, psi));
        OpWave cw =
            L(i, dyn::w_prime_k(ws, k, omega, psi)) - dyn::w_prime_k(ws, k, omega, L(i, psi));
        OpWave rz = ws.zero(), rx = ws.zero(), rw = ws.zero();
        for (int m = 0; m < 3; ++m)
          if (levi(i, k, m) != 0.0) {
            rz = rz + cplx(0.0, levi(i, k, m)) * dyn::zeta_k_hat(ws, m, psi);
            rx = rx + cplx(0.0, levi(i, k, m)) * X(m, psi);
            rw = rw + cplx(0.0, levi(i, k, m)) * dyn::w_prime_k(ws, m, omega, psi);
          }
        a48.take(rel_pair(cz, rz, win));
        a47.take(rel_pair(cx, rx, win));
        a49.take(rel_pair(cw, rw, win));
      }
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        OpWave zi = dyn::zeta_k_hat(ws, i, psi);
        OpWave zj = dyn::zeta_k_hat(ws, j, psi);
        OpWave czz = dyn::zeta_k_hat(ws, i, zj) - dyn::zeta_k_hat(ws, j, zi);
        OpWave rzz = ws.zero();
        for (int m = 0; m < 3; ++m)
          if (levi(i, j, m) != 0.0) rzz = rzz + cplx(0.0, -4.0 * levi(i, j, m)) * L(m, psi);
        a43.take(rel_pair(czz, rzz, win));

        OpWave cww = dyn::w_prime_k(ws, i, omega, dyn::w_prime_k(ws, j, omega, psi)) -
                     dyn::w_prime_k(ws, j, omega, dyn::w_prime_k(ws, i, omega, psi));
        OpWave rww = ws.zero();
        const double coef = 4.0 * l * omega * (1.0 + l * omega / 4.0);
        for (int m = 0; m < 3; ++m)
          if (levi(i, j, m) != 0.0) rww = rww + cplx(0.0, coef * levi(i, j, m)) * L(m, psi);
        a46.take(rel_pair(cww, rww, win));
      }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        OpWave zj = dyn::zeta_k_hat(ws, j, psi);
        OpWave cxz = X(i, zj) - dyn::zeta_k_hat(ws, j, X(i, psi));
        OpWave rxz = i == j ? cplx(l) * w_psi : ws.zero();
        a44.take(rel_to(cxz - rxz, psi, win) * l / 2.0);

        OpWave cxx = X(i, X(j, psi)) - X(j, X(i, psi));
        OpWave rxx = ws.zero();
        for (int m = 0; m < 3; ++m)
          if (levi(i, j, m) != 0.0) rxx = rxx + cplx(0.0, l * l * levi(i, j, m)) * L(m, psi);
        a45.take(rel_to(cxx - rxx, psi, win) / (l * l * double(cfg.n_max) + 1.0));
      }
    OpWave lz = ws.zero(), lx = ws.zero(), lw = ws.zero();
    for (int k = 0; k < 3; ++k) {
      lz = lz + L(k, dyn::zeta_k_hat(ws, k, psi));
      lx = lx + L(k, X(k, psi));
      lw = lw + L(k, dyn::w_prime_k(ws, k, omega, psi));
    }
    a51.take(rel_to(lz, psi, win) * l / (2.0 * cfg.n_max));
    a52.take(rel_to(lx, psi, win) / (l * cfg.n_max));
    a53.take(rel_to(lw, psi, win) / (std::abs(eta) * l * cfg.n_max + 1.0));
    OpWave quad = ws.zero();
    for (int k = 0; k < 3; ++k)
      quad = quad + dyn::w_prime_k(ws, k, omega, dyn::w_prime_k(ws, k, omega, psi));
    OpWave ll = ws.zero();
    for (int k = 0; k < 3; ++k) ll = ll + L(k, L(k, psi));
    quad = quad + cplx(eta * eta * l * l - 4.0) * (ll + psi);
    OpWave wp2 = dyn::w_prime(ws, omega, dyn::w_prime(ws, omega, psi));
    a54.take(rel_pair(quad, wp2, win));
    OpWave rz = ws.r_sym(1, z_psi) + dyn::zeta_hat(ws, ws.r_sym(1, psi));
    OpWave rhs62 = cplx(l) * w_psi + cplx(2.0) * dyn::zeta_hat(ws, ws.r_sym(1, psi));
    a62.take(rel_pair(rz, rhs62, win));
    OpWave xz = ws.zero(), zx = ws.zero();
    for (int k = 0; k < 3; ++k) {
      xz = xz + X(k, dyn::zeta_k_hat(ws, k, psi));
      zx = zx + dyn::zeta_k_hat(ws, k, X(k, psi));
    }
    a63a.take(rel_pair(xz - zx, cplx(3.0 * l) * w_psi, win));
    OpWave rhs63 = cplx(2.0) * ws.r_sym(1, z_psi) - cplx(l) * w_psi;
    a63b.take(rel_pair(xz + zx, rhs63, win));
    OpWave lhs64 = cplx(l) * w_psi + cplx(2.0) * dyn::zeta_hat(ws, ws.r_sym(1, psi));
    OpWave rhs64 = cplx(2.0) * ws.r_sym(1, z_psi) - cplx(l) * w_psi;
    a64.take(rel_pair(lhs64, rhs64, win));
  }

  rows.push_back(make_row("8.40", "zeta commutators produce the velocity", a40.v, 1e-10));
  rows.push_back(make_row("8.41", "zeta scalar and vector commute", a41.v, 1e-10));
  rows.push_back(make_row("8.42", "W' scalar and vector commute", a42.v, 1e-10));
  rows.push_back(make_row("8.43", "zeta vector algebra closes on L", a43.v, 1e-10));
  rows.push_back(make_row("8.44", "[X_i, zeta_j] = lambda delta_ij w", a44.v, 1e-10));
  rows.push_back(make_row("8.45", "[X_i, X_j] = i lambda^2 eps L", a45.v, 1e-10));
  rows.push_back(make_row("8.46", "W' vector commutator carries the omega factor", a46.v, 1e-10));
  rows.push_back(make_row("8.47", "[L_i, X_j] = i eps X", a47.v, 1e-10));
  rows.push_back(make_row("8.48", "[L_i, zeta_j] = i eps zeta", a48.v, 1e-10));
  rows.push_back(make_row("8.49", "[L_i, W'_j] = i eps W'", a49.v, 1e-10));
  rows.push_back(make_row("8.51", "L . zeta vanishes", a51.v, 1e-10));
  rows.push_back(make_row("8.52", "L . X vanishes", a52.v, 1e-10));
  rows.push_back(make_row("8.53", "L . W' vanishes", a53.v, 1e-10));
  rows.push_back(make_row("8.54", "quadratic identity resums (W')^2", a54.v, 1e-10));
  rows.push_back(make_row("8.62", "anticommutator {r, zeta}", a62.v, 1e-10));
  rows.push_back(make_row("8.63a", "[X_i, zeta_i] = 3 lambda w", a63a.v, 1e-10));
  rows.push_back(make_row("8.63b", "{X_i, zeta_i} = 2 r zeta - lambda w", a63b.v, 1e-10));
  rows.push_back(make_row("8.64", "the two reshuffled forms agree", a64.v, 1e-10));
}

}  // namespace

std::vector<CheckRow> lrl_suite(const SuiteConfig& cfg) {
  std::vector<CheckRow> rows;

  // dynamical-symmetry sector at parameters where the truncated eigenstates
  // pass the residual gate
  const double lambda = 1.0, q = 3.0;
  const int n_max = 18;
  Workspace ws(n_max, lambda);

  auto h0 = ham::build_radial_hamiltonian(0, q, lambda, ws.space());
  auto p0 = ham::diagonalize(h0, 2, true);
  auto h1 = ham::build_radial_hamiltonian(1, q, lambda, ws.space());
  auto p1 = ham::diagonalize(h1, 1, true);

  std::vector<OpWave> ground{opwave::build_psi_jm(ws, {0, 0}, p0[0].vec)};
  std::vector<OpWave> shell2{opwave::build_psi_jm(ws, {0, 0}, p0[1].vec)};
  for (int m = -1; m <= 1; ++m) shell2.push_back(opwave::build_psi_jm(ws, {1, m}, p1[0].vec));

  auto v1 = dyn::lrl_algebra_suite(ws, p0[0].value, q, ground);
  auto v2 = dyn::lrl_algebra_suite(ws, p0[1].value, q, shell2);

  rows.push_back(make_row("6.12", "direct and rewritten LRL constructions agree",
                          std::max(v1.lrl_forms, v2.lrl_forms), 1e-11));
  rows.push_back(make_row("6.13-gate", "eigenstate residual gate",
                          std::max(v1.eigen_gate, v2.eigen_gate), 1e-8));
  rows.push_back(make_row("6.14", "on-shell reduction to W'_k/(2 lambda)",
                          std::max(v1.on_shell_w_prime, v2.on_shell_w_prime), 1e-7));
  rows.push_back(make_row("6.15", "LRL conservation on eigenstates",
                          std::max(v1.conservation, v2.conservation), 1e-7));
  rows.push_back(make_row("6.17", "[A_i, A_j] carries the energy factor",
                          std::max(v1.algebra_aa, v2.algebra_aa), 1e-7));
  rows.push_back(make_row("6.18", "[L_i, A_j] = i eps A_k",
                          std::max(v1.algebra_la, v2.algebra_la), 1e-7));
  rows.push_back(
      make_row("6.19", "first Casimir vanishes", std::max(v1.casimir1, v2.casimir1), 1e-7));
  rows.push_back(make_row("6.20", "second Casimir equals q^2",
                          std::max({v1.casimir2_residual, v2.casimir2_residual,
                                    std::abs(v1.casimir2_value - q * q) / (q * q),
                                    std::abs(v2.casimir2_value - q * q) / (q * q)}),
                          1e-7));
  const bool so4_ok = v1.algebra == dyn::SymmetryVerdict::Algebra::so4 &&
                      v2.algebra == dyn::SymmetryVerdict::Algebra::so4;
  rows.push_back(
      make_row("6.16-sign", "bound sector classified as so(4)", so4_ok ? 0.0 : 1.0, 0.5));

  // scattering sector: closed-form interior eigenstates, so(3,1) verdict and
  // the principal-series Casimir value
  {
    const double e_sc = 0.8;
    std::vector<OpWave> states;
    for (int j : {0, 1}) {
      ham::RadialParams rp;
      rp.kind = ham::RadialCase::scatter;
      rp.j = j;
      rp.lambda = lambda;
      rp.alpha = q;
      rp.energy = e_sc;
      rp.len = n_max - j + 1;
      auto rv = ham::solve_radial_closed_form(rp);
      for (int m = -j; m <= j; ++m) states.push_back(opwave::build_psi_jm(ws, {j, m}, rv));
    }
    auto vs = dyn::lrl_algebra_suite(ws, e_sc, q, states);
    rows.push_back(make_row("6.31", "scattering sector closes as so(3,1)",
                            vs.algebra == dyn::SymmetryVerdict::Algebra::so31 ? vs.worst() : 1.0,
                            1e-7));
    const double tau = scatter::so31_casimir_tau(e_sc, q, lambda);
    const double from_c2 = 1.0 + vs.casimir2_value / (-vs.factor);
    rows.push_back(
        make_row("6.33", "principal-series Casimir value", std::abs(from_c2 - tau) / tau, 1e-7));
  }

  // symmetry-derived spectrum against the closed forms, shared subexpressions
  {
    double worst = 0.0;
    for (double qq : {1.0, -1.0})
      for (double ll : {0.1, 0.5, 1.0})
        for (int n = 1; n <= 5; ++n) {
          const auto [e1, e2] = dyn::spectrum_from_symmetry(qq, ll, n);
          if (qq > 0.0) {
            const double want = ham::bound_energy(ham::Family::I, n, 0, qq, ll).value;
            worst = std::max(worst, std::abs(e1 - want) / std::abs(want));
          } else {
            const double want = ham::bound_energy(ham::Family::II, n, 0, qq, ll).value;
            worst = std::max(worst, std::abs(e2 - want) / std::abs(want));
          }
        }
    rows.push_back(
        make_row("6.25", "Casimir spectrum equals the radial closed forms", worst, 1e-12));
  }

  append_appendix_rows(rows, cfg);
  return rows;
}

std::vector<CheckRow> all_suites(const SuiteConfig& cfg) {
  std::vector<CheckRow> rows;
  for (auto&& part : {algebra_suite(cfg), ordering_suite(cfg), specfun_suite(cfg),
                      dynamics_suite(cfg), lrl_suite(cfg)})
    rows.insert(rows.end(), part.begin(), part.end());
  return rows;
}

}  // namespace ncqm::suites
