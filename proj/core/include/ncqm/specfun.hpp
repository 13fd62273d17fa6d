#pragma once

#include <complex>

namespace ncqm::specfun {

using cplx = std::complex<double>;

bool is_nonpositive_integer(cplx z, double tol = 0.0);

// (a)_m = a(a+1)...(a+m-1), (a)_0 = 1.
cplx pochhammer(cplx a, int m);

// Principal-branch log Gamma via a 9-term Lanczos sum (g = 7), reflected for
// Re z < 0.5. Throws std::domain_error at the poles.
cplx log_gamma(cplx z);

// 1/Gamma(z); entire, returns exactly 0 at non-positive integer z.
cplx recip_gamma(cplx z);

// Kummer's confluent hypergeometric 1F1(a; c; x). Terminates exactly when a
// is a non-positive integer; throws std::domain_error when c is a
// non-positive integer that truncates the series first.
cplx hyp1f1(cplx a, cplx c, cplx x);

// Gauss hypergeometric 2F1(a, b; c; x). Supports the polynomial case (a or b
// a non-positive integer) for any x, otherwise the series on |x| < 1.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx x);

// Bessel function of the first kind, complex order and argument.
cplx bessel_j(cplx nu, cplx x);

// |e^{-x/2} 1F1(a,c;x) - e^{x/2} 1F1(c-a,c;-x)|.
double kummer_residual(cplx a, cplx c, cplx x);

// |1F1(a;c;x) - 2F1(a,b;c;x/b)|; decreases like O(1/b).
double confluent_limit_residual(cplx a, cplx c, cplx x, double b);

// |2F1(a,b;c;x) - (1-x)^{-b} 2F1(c-a,b;c;x/(x-1))| inside the unit disk.
double euler_transform_residual(cplx a, cplx b, cplx c, cplx x);

// (a0 x + b0) y'' + (a1 x + b1) y' + (a2 x + b2) y = 0.
struct GeneralSecondOrderEq {
  cplx a0{1.0}, b0{0.0};
  cplx a1{0.0}, b1{0.0};
  cplx a2{0.0}, b2{0.0};
  cplx discriminant_sq() const { return a1 * a1 - 4.0 * a0 * a2; }
};

// Regular solution of the equation above, reduced to confluent-hypergeometric
// or Bessel form depending on whether D^2 = a1^2 - 4 a0 a2 vanishes.
struct ReducedSolutionForm {
  enum class Kind { confluent, bessel };
  Kind kind = Kind::confluent;
  cplx exp_rate;  // y ~ e^{exp_rate * x} * (...)

  // confluent: y = e^{(D-a1)x/2} zeta(a, c, -D x)
  cplx D;
  cplx hyp_a, hyp_c;

  // bessel: y = e^{-a1 x/2} x^{(1-b1)/2} C_{1-b1}(sqrt(arg_scale * x))
  cplx bessel_order;
  cplx arg_scale;

  // Evaluates with the regular member of the fundamental system (1F1 or J).
  cplx eval_regular(cplx x) const;
};

// Requires a0 = 1, b0 = 0; branch = +1/-1 picks the sign of D. Either sign
// yields the same regular solution (Kummer identity).
ReducedSolutionForm reduce_general_equation(const GeneralSecondOrderEq& eq, int branch);

}  // namespace ncqm::specfun
