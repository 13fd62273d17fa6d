#include "ncqm/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ncqm::specfun {

namespace {

constexpr double pi = std::numbers::pi;

// Lanczos g = 7, 9 coefficients (Godfrey's set); relative error < 1e-13 on
// the right half plane.
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

// log sin(pi z), safe for large |Im z|.
cplx log_sin_pi(cplx z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i), |e^{2 i pi z}| <= 1
  const cplx w = std::exp(cplx(0.0, 2.0 * pi) * z);
  return cplx(0.0, -pi) * z + std::log((w - cplx(1.0)) * cplx(0.0, -0.5));
}

cplx log_gamma_core(cplx z) {
  // valid for Re z >= 0.5
  z -= 1.0;
  cplx sum = lanczos_c[0];
  for (int i = 1; i < 9; ++i) sum += lanczos_c[i] / (z + double(i));
  const cplx base = z + lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(base) - base + std::log(sum);
}

}  // namespace

bool is_nonpositive_integer(cplx z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = std::rint(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

cplx pochhammer(cplx a, int m) {
  if (m < 0) throw std::invalid_argument("pochhammer: m must be >= 0");
  cplx r = 1.0;
  for (int i = 0; i < m; ++i) r *= a + double(i);
  return r;
}

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z)) throw std::domain_error("log_gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return log_gamma_core(z);
  // Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(pi) - log_sin_pi(z) - log_gamma_core(1.0 - z);
}

cplx recip_gamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.real() >= 0.5) return std::exp(-log_gamma_core(z));
  return std::exp(log_sin_pi(z) + log_gamma_core(1.0 - z) - std::log(pi));
}

namespace {

// Shared tail rule: stop once 30 consecutive terms are below 1e-17 * |sum|.
class TailGate {
public:
  bool done(double term_mag, double sum_mag) {
    if (term_mag < 1e-17 * sum_mag)
      ++quiet_;
    else
      quiet_ = 0;
    return quiet_ >= 30;
  }

private:
  int quiet_ = 0;
};

}  // namespace

cplx hyp1f1(cplx a, cplx c, cplx x) {
  const bool a_terminates = is_nonpositive_integer(a);
  if (is_nonpositive_integer(c)) {
    const long ci = std::lround(-c.real());
    const long ai = a_terminates ? std::lround(-a.real()) : -1;
    if (!a_terminates || ai > ci)
      throw std::domain_error("hyp1f1: denominator parameter truncates the series");
  }
  const long n_stop = a_terminates ? std::lround(-a.real()) : -1;

  cplx sum = 1.0;
  cplx term = 1.0;
  TailGate gate;
  for (long m = 0;; ++m) {
    if (a_terminates && m >= n_stop) break;
    term *= (a + double(m)) / (c + double(m)) * x / double(m + 1);
    sum += term;
    if (!a_terminates && gate.done(std::abs(term), std::abs(sum))) break;
    if (m > 200000) throw std::runtime_error("hyp1f1: series did not converge");
  }
  return sum;
}

cplx hyp2f1(cplx a, cplx b, cplx c, cplx x) {
  // prefer the terminating parameter
  bool a_term = is_nonpositive_integer(a);
  bool b_term = is_nonpositive_integer(b);
  if (a_term && b_term && -b.real() < -a.real()) std::swap(a, b);
  if (!a_term && b_term) std::swap(a, b);
  a_term = is_nonpositive_integer(a);

  if (is_nonpositive_integer(c)) {
    const long ci = std::lround(-c.real());
    if (!a_term || std::lround(-a.real()) > ci)
      throw std::domain_error("hyp2f1: denominator parameter truncates the series");
  }
  if (!a_term && std::abs(x) >= 1.0)
    throw std::domain_error("hyp2f1: series needs |x| < 1 unless polynomial");

  const long n_stop = a_term ? std::lround(-a.real()) : -1;
  cplx sum = 1.0;
  cplx term = 1.0;
  TailGate gate;
  for (long m = 0;; ++m) {
    if (a_term && m >= n_stop) break;
    term *= (a + double(m)) * (b + double(m)) / (c + double(m)) * x / double(m + 1);
    sum += term;
    if (!a_term && gate.done(std::abs(term), std::abs(sum))) break;
    if (m > 200000) throw std::runtime_error("hyp2f1: series did not converge");
  }
  return sum;
}

cplx bessel_j(cplx nu, cplx x) {
  // sum_m (-1)^m (x/2)^{2m+nu} / (m! Gamma(m+nu+1)); the prefactor is split
  // off so the loop runs on the entire 1/Gamma.
  const cplx half_x = 0.5 * x;
  const cplx xx = half_x * half_x;
  cplx prefactor;
  if (x == cplx(0.0)) {
    // (x/2)^nu at x = 0: 1 for nu = 0, 0 for Re nu > 0 and negative integer nu
    if (nu == cplx(0.0)) return 1.0;
    if (nu.real() > 0.0 || is_nonpositive_integer(nu)) return 0.0;
    throw std::domain_error("bessel_j: singular at x = 0 for Re nu < 0");
  }
  prefactor = std::pow(half_x, nu);

  cplx sum = 0.0;
  cplx pw = 1.0;  // (-1)^m xx^m / m!
  TailGate gate;
  for (long m = 0;; ++m) {
    const cplx term = pw * recip_gamma(nu + double(m + 1));
    sum += term;
    // skip the gate while leading 1/Gamma zeros keep the sum empty
    if (sum != cplx(0.0) && gate.done(std::abs(term), std::abs(sum))) break;
    if (m > 200000) throw std::runtime_error("bessel_j: series did not converge");
    pw *= -xx / double(m + 1);
  }
  return prefactor * sum;
}

double kummer_residual(cplx a, cplx c, cplx x) {
  const cplx lhs = std::exp(-0.5 * x) * hyp1f1(a, c, x);
  const cplx rhs = std::exp(0.5 * x) * hyp1f1(c - a, c, -x);
  return std::abs(lhs - rhs);
}

double confluent_limit_residual(cplx a, cplx c, cplx x, double b) {
  return std::abs(hyp1f1(a, c, x) - hyp2f1(a, b, c, x / b));
}

double euler_transform_residual(cplx a, cplx b, cplx c, cplx x) {
  const cplx lhs = hyp2f1(a, b, c, x);
  const cplx rhs = std::pow(1.0 - x, -b) * hyp2f1(c - a, b, c, x / (x - 1.0));
  return std::abs(lhs - rhs);
}

cplx ReducedSolutionForm::eval_regular(cplx x) const {
  if (kind == Kind::confluent)
    return std::exp(exp_rate * x) * hyp1f1(hyp_a, hyp_c, -D * x);
  return std::exp(exp_rate * x) * std::pow(x, 0.5 * (1.0 - hyp_c)) *
         bessel_j(bessel_order, std::sqrt(arg_scale * x));
}

ReducedSolutionForm reduce_general_equation(const GeneralSecondOrderEq& eq, int branch) {
  if (eq.a0 != cplx(1.0) || eq.b0 != cplx(0.0))
    throw std::domain_error("reduce_general_equation: only a0 = 1, b0 = 0 is supported");
  ReducedSolutionForm f;
  f.hyp_c = eq.b1;
  const cplx d2 = eq.discriminant_sq();
  if (d2 == cplx(0.0)) {
    f.kind = ReducedSolutionForm::Kind::bessel;
    f.exp_rate = -0.5 * eq.a1;
    f.bessel_order = 1.0 - eq.b1;
    f.arg_scale = -2.0 * eq.a1 * eq.b1 + 4.0 * eq.b2;
    return f;
  }
  f.kind = ReducedSolutionForm::Kind::confluent;
  f.D = double(branch) * std::sqrt(d2);
  f.exp_rate = 0.5 * (f.D - eq.a1);
  f.hyp_a = (0.5 * (f.D - eq.a1) * eq.b1 + eq.b2) / f.D;
  return f;
}

}  // namespace ncqm::specfun
