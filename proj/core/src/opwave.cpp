#include "ncqm/opwave.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ncqm::opwave {

namespace {
constexpr double four_pi = 4.0 * std::numbers::pi;

double sqrt_falling(int n, int k) {
  // sqrt(n!/(n-k)!)
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= double(n - i);
  return std::sqrt(p);
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= double(i);
  return f;
}
}  // namespace

OpWave operator+(const OpWave& a, const OpWave& b) { return {a.lambda, a.space, a.mat + b.mat}; }
OpWave operator-(const OpWave& a, const OpWave& b) { return {a.lambda, a.space, a.mat - b.mat}; }
OpWave operator*(cplx s, const OpWave& a) { return {a.lambda, a.space, s * a.mat}; }

Workspace::Workspace(int n_max, double lambda) : space_(n_max), lambda_(lambda) {
  if (lambda <= 0.0) throw std::invalid_argument("Workspace: lambda must be positive");
  a_[0] = fock::ladder_sparse(space_, fock::Ladder::a1);
  a_[1] = fock::ladder_sparse(space_, fock::Ladder::a2);
  ad_[0] = fock::ladder_sparse(space_, fock::Ladder::a1_dag);
  ad_[1] = fock::ladder_sparse(space_, fock::Ladder::a2_dag);

  // x1 = lambda(a2^d a1 + a1^d a2), x2 = i lambda(a2^d a1 - a1^d a2),
  // x3 = lambda(a1^d a1 - a2^d a2); all conserve total quanta.
  for (int i = 0; i < 3; ++i) x_[i] = SparseOp(space_.dim());
  for (std::size_t col = 0; col < space_.dim(); ++col) {
    const auto& s = space_.state(col);
    if (s.n1 > 0) {
      // a2^d a1 : |n1,n2> -> sqrt(n1 (n2+1)) |n1-1, n2+1>
      const double c = std::sqrt(double(s.n1) * double(s.n2 + 1));
      const std::size_t row = space_.index_of({s.n1 - 1, s.n2 + 1});
      x_[0].insert(row, col, lambda_ * c);
      x_[1].insert(row, col, cplx(0.0, lambda_) * c);
    }
    if (s.n2 > 0) {
      // a1^d a2 : |n1,n2> -> sqrt(n2 (n1+1)) |n1+1, n2-1>
      const double c = std::sqrt(double(s.n2) * double(s.n1 + 1));
      const std::size_t row = space_.index_of({s.n1 + 1, s.n2 - 1});
      x_[0].insert(row, col, lambda_ * c);
      x_[1].insert(row, col, cplx(0.0, -lambda_) * c);
    }
    x_[2].insert(col, col, lambda_ * double(s.n1 - s.n2));
  }
}

std::vector<cplx> Workspace::r_pow_diag(int power) const {
  std::vector<cplx> d(space_.dim());
  for (std::size_t i = 0; i < space_.dim(); ++i)
    d[i] = std::pow(lambda_ * double(space_.state(i).total() + 1), power);
  return d;
}

OpWave Workspace::wave(Mat m) const { return {lambda_, &space_, std::move(m)}; }

OpWave Workspace::zero() const { return wave(Mat(space_.dim())); }

OpWave Workspace::identity_wave() const { return wave(Mat::identity(space_.dim())); }

OpWave Workspace::x_wave(int i) const { return wave(x_[i].to_dense()); }

OpWave Workspace::radial_wave(const std::function<cplx(int)>& f_of_n) const {
  Mat m(space_.dim());
  for (std::size_t i = 0; i < space_.dim(); ++i) m(i, i) = f_of_n(space_.state(i).total());
  return wave(std::move(m));
}

OpWave Workspace::random_balanced(Rng& rng) const {
  Mat m(space_.dim());
  for (int n = 0; n <= space_.n_max(); ++n) {
    const std::size_t s = space_.block_start(n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) m(s + i, s + j) = rng.complex_box();
  }
  return wave(std::move(m));
}

OpWave Workspace::r_left(int power, const OpWave& p) const {
  return wave(diag_left(r_pow_diag(power), p.mat));
}

OpWave Workspace::r_right(int power, const OpWave& p) const {
  return wave(diag_right(p.mat, r_pow_diag(power)));
}

OpWave Workspace::r_sym(int power, const OpWave& p) const {
  OpWave l = r_left(power, p);
  OpWave r = r_right(power, p);
  return {lambda_, &space_, 0.5 * (l.mat + r.mat)};
}

SuperOp super_ladder(const Workspace& ws, LadderSide kind, int alpha) {
  SuperOp op;
  op.degree = 1;
  switch (kind) {
    case LadderSide::a:
      op.label = "a_hat";
      op.action = [&ws, alpha](const OpWave& p) { return ws.a_hat(alpha, p); };
      break;
    case LadderSide::a_dag:
      op.label = "ad_hat";
      op.action = [&ws, alpha](const OpWave& p) { return ws.ad_hat(alpha, p); };
      break;
    case LadderSide::b:
      op.label = "b_hat";
      op.action = [&ws, alpha](const OpWave& p) { return ws.b_hat(alpha, p); };
      break;
    case LadderSide::b_dag:
      op.label = "bd_hat";
      op.action = [&ws, alpha](const OpWave& p) { return ws.bd_hat(alpha, p); };
      break;
  }
  return op;
}

SuperOp coordinate_superop(const Workspace& ws, int i, Side side) {
  SuperOp op;
  op.degree = 2;  // gross ladder count of x
  op.label = "x" + std::to_string(i + 1);
  switch (side) {
    case Side::left:
      op.action = [&ws, i](const OpWave& p) { return ws.x_left(i, p); };
      break;
    case Side::right:
      op.action = [&ws, i](const OpWave& p) { return ws.x_right(i, p); };
      break;
    case Side::symmetric:
      op.action = [&ws, i](const OpWave& p) {
        return 0.5 * (ws.x_left(i, p) + ws.x_right(i, p));
      };
      break;
  }
  return op;
}

SuperOp radius_superop(const Workspace& ws, int power, Side side) {
  SuperOp op;
  op.degree = 0;  // diagonal in the N grading
  op.label = "r^" + std::to_string(power);
  switch (side) {
    case Side::left:
      op.action = [&ws, power](const OpWave& p) { return ws.r_left(power, p); };
      break;
    case Side::right:
      op.action = [&ws, power](const OpWave& p) { return ws.r_right(power, p); };
      break;
    case Side::symmetric:
      op.action = [&ws, power](const OpWave& p) { return ws.r_sym(power, p); };
      break;
  }
  return op;
}

SuperOp angular_momentum_superop(const Workspace& ws, int i) {
  SuperOp op;
  op.degree = 2;
  op.label = "L" + std::to_string(i + 1);
  const double inv = 1.0 / (2.0 * ws.lambda());
  op.action = [&ws, i, inv](const OpWave& p) {
    return inv * (ws.x_left(i, p) - ws.x_right(i, p));
  };
  return op;
}

SuperOp compose(const SuperOp& f, const SuperOp& g) {
  SuperOp op;
  op.degree = f.degree + g.degree;
  op.label = f.label + "*" + g.label;
  op.action = [f, g](const OpWave& p) { return f.action(g.action(p)); };
  return op;
}

SuperOp commutator(const SuperOp& f, const SuperOp& g) {
  SuperOp op;
  op.degree = f.degree + g.degree;
  op.label = "[" + f.label + "," + g.label + "]";
  op.action = [f, g](const OpWave& p) {
    return f.action(g.action(p)) - g.action(f.action(p));
  };
  return op;
}

SuperOp lincomb(cplx ca, const SuperOp& a, cplx cb, const SuperOp& b) {
  SuperOp op;
  op.degree = std::max(a.degree, b.degree);
  op.label = a.label + "+" + b.label;
  op.action = [ca, a, cb, b](const OpWave& p) {
    return ca * a.action(p) + cb * b.action(p);
  };
  return op;
}

bool is_balanced(const OpWave& p, double tol) {
  const auto& sp = *p.space;
  double scale = max_abs(p.mat);
  if (scale == 0.0) return true;
  for (std::size_t i = 0; i < sp.dim(); ++i)
    for (std::size_t j = 0; j < sp.dim(); ++j)
      if (sp.state(i).total() != sp.state(j).total() && std::abs(p.mat(i, j)) > tol * scale)
        return false;
  return true;
}

cplx hs_inner(const OpWave& phi, const OpWave& psi) {
  const auto& sp = *psi.space;
  cplx s = 0.0;
  for (std::size_t k = 0; k < sp.dim(); ++k) {
    const double w = double(sp.state(k).total() + 1);
    cplx col = 0.0;
    for (std::size_t j = 0; j < sp.dim(); ++j) col += std::conj(phi.mat(j, k)) * psi.mat(j, k);
    s += w * col;
  }
  const double l = psi.lambda;
  return four_pi * l * l * l * s;
}

double hs_norm_sq(const OpWave& psi) { return hs_inner(psi, psi).real(); }

double hs_norm_sq_window(const OpWave& psi, int degree) {
  return hs_norm_sq_band(psi, 0, psi.space->n_max() - degree);
}

double hs_norm_sq_band(const OpWave& psi, int lo_block, int hi_block) {
  const auto& sp = *psi.space;
  double s = 0.0;
  for (std::size_t k = 0; k < sp.dim(); ++k) {
    const int nk = sp.state(k).total();
    if (nk < lo_block || nk > hi_block) continue;
    const double w = double(nk + 1);
    for (std::size_t j = 0; j < sp.dim(); ++j) {
      const int nj = sp.state(j).total();
      if (nj < lo_block || nj > hi_block) continue;
      s += w * std::norm(psi.mat(j, k));
    }
  }
  const double l = psi.lambda;
  return four_pi * l * l * l * s;
}

double rel_residual_window(const OpWave& lhs, const OpWave& rhs, const OpWave& ref, int degree) {
  const double num = hs_norm_sq_window(lhs - rhs, degree);
  const double den = hs_norm_sq_window(ref, degree);
  return std::sqrt(num / den);
}

double max_abs_entry_window(const OpWave& psi, int degree) {
  const auto& sp = *psi.space;
  const int cut = sp.n_max() - degree;
  double r = 0.0;
  for (std::size_t i = 0; i < sp.dim(); ++i) {
    if (sp.state(i).total() > cut) continue;
    for (std::size_t j = 0; j < sp.dim(); ++j) {
      if (sp.state(j).total() > cut) continue;
      r = std::max(r, std::abs(psi.mat(i, j)));
    }
  }
  return r;
}

OpWave build_psi_jm(const Workspace& ws, const AngularLabel& label, const RadialVector& radial) {
  const int j = label.j;
  const int m = label.m;
  if (j < 0 || std::abs(m) > j) throw std::invalid_argument("build_psi_jm: need |m| <= j");
  const auto& sp = ws.space();
  Mat out(sp.dim());
  // The bare multinomial family carries norm ratios C(2j, j+m) across the
  // multiplet; dividing them out makes the m-states a unitary multiplet with
  // the common radial norm of the m = j member.
  double binom = 1.0;
  for (int i = 1; i <= j + m; ++i) binom *= double(2 * j - (j + m) + i) / double(i);
  const double lam_j = std::pow(ws.lambda(), j) / std::sqrt(binom);

  for (std::size_t col = 0; col < sp.dim(); ++col) {
    const auto& s = sp.state(col);
    const int nu = s.total() - j;  // radial index after annihilating j quanta
    if (nu < 0 || nu >= static_cast<int>(radial.size())) continue;
    const cplx rval = radial.coeffs[nu];
    if (rval == cplx(0.0)) continue;
    for (int m1 = std::max(0, m); m1 <= std::min(j, j + m); ++m1) {
      const int n1 = m1 - m;
      const int m2 = j - m1;
      const int n2 = j - n1;
      if (s.n1 < n1 || s.n2 < n2) continue;
      const int k1 = s.n1 - n1;
      const int k2 = s.n2 - n2;
      const double amp = sqrt_falling(s.n1, n1) * sqrt_falling(s.n2, n2) *
                         sqrt_falling(k1 + m1, m1) * sqrt_falling(k2 + m2, m2);
      const double sign = (n2 % 2 == 0) ? 1.0 : -1.0;
      const double denom = factorial(m1) * factorial(m2) * factorial(n1) * factorial(n2);
      const std::size_t row = sp.index_of({k1 + m1, k2 + m2});
      out(row, col) += lam_j * sign / denom * amp * rval;
    }
  }
  return ws.wave(std::move(out));
}

double radial_norm_formula(int j, const RadialVector& radial, double lambda) {
  const double pref =
      four_pi * std::pow(lambda, 3 + 2 * j) / (factorial(j) * factorial(j));
  return pref * weighted_norm_sq(radial);
}

double ball_volume(int n, double lambda) {
  double s = 0.0;
  for (int k = 0; k <= n; ++k) s += double(k + 1) * double(k + 1);
  return four_pi * lambda * lambda * lambda * s;
}

}  // namespace ncqm::opwave
