#pragma once

#include <complex>
#include <vector>

#include "ncqm/bigint.hpp"

namespace ncqm::ordering {

using cplx = std::complex<double>;

// Signed Stirling numbers of the first kind, fixed by the falling-factorial
// expansion (x)_n = x(x-1)...(x-n+1) = sum_k s(n,k) x^k. Exact integers;
// the table extends itself on demand.
class StirlingTable {
public:
  explicit StirlingTable(int max_n = 0) { extend(max_n); }

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }
  void extend(int n);

  // s(n, k); defined as 0 for k > n or k < 0.
  const BigInt& operator()(int n, int k) const;

private:
  std::vector<std::vector<BigInt>> rows_;
  static const BigInt zero_;
};

BigInt stirling_first(int n, int k);

// Falling factorial n!/(n-k)! as an exact integer (n, k >= 0; zero for k > n).
BigInt falling_factorial_int(std::int64_t n, int k);
// Falling factorial of an arbitrary integer argument x(x-1)...(x-k+1).
BigInt falling_factorial_at(std::int64_t x, int k);
BigInt binomial_int(int n, int k);

// Eigenvalue of the normal power :(lambda N)^k: on a state of total quanta n.
// k >= 0: lambda^k n!/(n-k)!  (zero for k > n); k = -m < 0: lambda^-m n!/(n+m)!.
double normal_power_eigenvalue(int k, int n, double lambda);

// Finite series R(rho) = sum_k c_k :rho^k:.
struct NormalPolySeries {
  std::vector<cplx> coeffs;  // coeffs[k] multiplies :rho^k:
  double lambda = 1.0;
};

// Ordinary polynomial in rho with p(lambda * n) = eigenvalue of the series.
struct OrdinaryPoly {
  std::vector<cplx> coeffs;  // coeffs[k] multiplies rho^k
  cplx eval(cplx rho) const;
};

// Converts :rho^n: = sum_k lambda^(n-k) s(n,k) rho^k term by term.
OrdinaryPoly normal_to_ordinary(const NormalPolySeries& p);

// Eigenvalue of :e^{beta rho}: on total quanta n, equal to (1 + lambda beta)^n.
cplx normal_exponential(cplx beta, int n, double lambda);
// Finite-sum route sum_k beta^k/k! * :rho^k:-eigenvalue; the check for (the
// closed form above).
cplx normal_exponential_series(cplx beta, int n, double lambda);

// Eigenvalue of :rho^m e^{beta rho}:. For m >= 0 this is
// lambda^m n!/(n-m)! (1+beta lambda)^(n-m); for m < 0 the factorial ratio and
// exponent shift run the other way.
cplx normal_power_times_exponential(int m, cplx beta, int n, double lambda);
cplx normal_power_times_exponential_series(int m, cplx beta, int n, double lambda);

}  // namespace ncqm::ordering
