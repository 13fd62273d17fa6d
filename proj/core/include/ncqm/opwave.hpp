#pragma once

#include <functional>
#include <memory>
#include <string>

#include "ncqm/fock.hpp"
#include "ncqm/mat.hpp"
#include "ncqm/radial.hpp"
#include "ncqm/rng.hpp"

namespace ncqm::opwave {

// Operator wave function: an element of H_lambda stored as a matrix on the
// truncated Fock space. Physical states couple F_n only to F_n (balanced).
struct OpWave {
  double lambda = 1.0;
  const fock::FockSpace* space = nullptr;
  Mat mat;
};

OpWave operator+(const OpWave& a, const OpWave& b);
OpWave operator-(const OpWave& a, const OpWave& b);
OpWave operator*(cplx s, const OpWave& a);

struct AngularLabel {
  int j = 0;
  int m = 0;
};

// Per-space operator workspace: ladder and coordinate matrices plus the
// diagonal radial data everything downstream multiplies with.
class Workspace {
public:
  Workspace(int n_max, double lambda);

  const fock::FockSpace& space() const { return space_; }
  double lambda() const { return lambda_; }
  std::size_t dim() const { return space_.dim(); }
  int n_max() const { return space_.n_max(); }

  const SparseOp& a(int alpha) const { return a_[alpha]; }
  const SparseOp& ad(int alpha) const { return ad_[alpha]; }
  const SparseOp& x(int i) const { return x_[i]; }

  // r = lambda(N+1) to an integer power, as per-basis-state diagonal values.
  std::vector<cplx> r_pow_diag(int power) const;

  OpWave wave(Mat m) const;
  OpWave zero() const;
  OpWave identity_wave() const;
  OpWave x_wave(int i) const;
  // f(r) as a diagonal OpWave given values per total-quanta block.
  OpWave radial_wave(const std::function<cplx(int)>& f_of_n) const;
  OpWave random_balanced(Rng& rng) const;

  // hatted ladder actions: a-hat multiplies from the left, b-hat from the
  // right (Eq. forms a_hat Psi = a Psi, b_hat Psi = Psi a).
  OpWave a_hat(int alpha, const OpWave& p) const { return wave(a_[alpha].apply_left(p.mat)); }
  OpWave ad_hat(int alpha, const OpWave& p) const { return wave(ad_[alpha].apply_left(p.mat)); }
  OpWave b_hat(int alpha, const OpWave& p) const { return wave(a_[alpha].apply_right(p.mat)); }
  OpWave bd_hat(int alpha, const OpWave& p) const { return wave(ad_[alpha].apply_right(p.mat)); }

  OpWave x_left(int i, const OpWave& p) const { return wave(x_[i].apply_left(p.mat)); }
  OpWave x_right(int i, const OpWave& p) const { return wave(x_[i].apply_right(p.mat)); }

  OpWave r_left(int power, const OpWave& p) const;
  OpWave r_right(int power, const OpWave& p) const;
  OpWave r_sym(int power, const OpWave& p) const;

private:
  fock::FockSpace space_;
  double lambda_;
  SparseOp a_[2], ad_[2], x_[3];
};

// Linear map on operator wave functions. `degree` is the gross ladder count
// per application: identities are claimed only on basis blocks with total
// quanta <= n_max - accumulated degree.
struct SuperOp {
  std::function<OpWave(const OpWave&)> action;
  int degree = 0;
  std::string label;

  OpWave operator()(const OpWave& p) const { return action(p); }
};

enum class LadderSide { a, a_dag, b, b_dag };
enum class Side { left, right, symmetric };

SuperOp super_ladder(const Workspace& ws, LadderSide kind, int alpha);
SuperOp coordinate_superop(const Workspace& ws, int i, Side side);
SuperOp radius_superop(const Workspace& ws, int power, Side side);
SuperOp angular_momentum_superop(const Workspace& ws, int i);

// Commutator / composition helpers (degrees add).
SuperOp compose(const SuperOp& f, const SuperOp& g);
SuperOp commutator(const SuperOp& f, const SuperOp& g);
SuperOp lincomb(cplx ca, const SuperOp& a, cplx cb, const SuperOp& b);

bool is_balanced(const OpWave& p, double tol = 1e-12);

// Weighted Hilbert-Schmidt inner product 4 pi lambda^3 Tr[(N+1) Phi^d Psi].
cplx hs_inner(const OpWave& phi, const OpWave& psi);
double hs_norm_sq(const OpWave& psi);
// Norm restricted to matrix entries whose row and column blocks do not exceed
// n_max - degree.
double hs_norm_sq_window(const OpWave& psi, int degree);
// Norm over entries whose row and column blocks lie in [lo_block, hi_block].
double hs_norm_sq_band(const OpWave& psi, int lo_block, int hi_block);
double max_abs_entry_window(const OpWave& psi, int degree);

// sqrt(||lhs - rhs||^2 / ||ref||^2) on the window shrunk by `degree`.
double rel_residual_window(const OpWave& lhs, const OpWave& rhs, const OpWave& ref, int degree);

// Angular eigenfunction Psi_jm built from ladder monomials around a
// diagonal-in-N radial factor; radial.coeffs[nu] is the value on the block
// with total quanta nu + j. The m-states are normalized as a unitary
// multiplet, so the norm is m-independent and matches radial_norm_formula.
OpWave build_psi_jm(const Workspace& ws, const AngularLabel& label, const RadialVector& radial);

// Radial norm formula: 4 pi lambda^(3+2j)/(j!)^2 sum_nu w(nu) |R(nu)|^2,
// truncated consistently with the workspace.
double radial_norm_formula(int j, const RadialVector& radial, double lambda);

// Volume 4 pi lambda^3 sum_{k<=n} (k+1)^2 of the ball r = lambda(n+1).
double ball_volume(int n, double lambda);

}  // namespace ncqm::opwave
