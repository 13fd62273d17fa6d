#include "ncqm/ordering.hpp"

#include <cmath>
#include <stdexcept>

namespace ncqm::ordering {

const BigInt StirlingTable::zero_ = BigInt(0);

void StirlingTable::extend(int n) {
  if (rows_.empty()) rows_.push_back({BigInt(1)});  // s(0,0) = 1
  while (max_n() < n) {
    const int m = max_n();  // building row m+1 from row m
    const auto& prev = rows_.back();
    std::vector<BigInt> row(static_cast<std::size_t>(m) + 2, BigInt(0));
    // s(m+1, k) = s(m, k-1) - m * s(m, k)
    for (int k = 0; k <= m + 1; ++k) {
      BigInt v(0);
      if (k >= 1 && k - 1 <= m) v += prev[k - 1];
      if (k <= m) v -= BigInt(m) * prev[k];
      row[k] = v;
    }
    rows_.push_back(std::move(row));
  }
}

const BigInt& StirlingTable::operator()(int n, int k) const {
  if (n < 0 || k < 0 || k > n) return zero_;
  if (n > max_n()) throw std::out_of_range("StirlingTable: row not built");
  return rows_[n][k];
}

BigInt stirling_first(int n, int k) {
  if (n < 0) throw std::invalid_argument("stirling_first: n must be >= 0");
  if (k < 0 || k > n) return BigInt(0);
  thread_local StirlingTable table(32);
  table.extend(n);
  return table(n, k);
}

BigInt falling_factorial_int(std::int64_t n, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial_int: k must be >= 0");
  if (k > n) return BigInt(0);
  BigInt r(1);
  for (int i = 0; i < k; ++i) r *= BigInt(n - i);
  return r;
}

BigInt falling_factorial_at(std::int64_t x, int k) {
  BigInt r(1);
  for (int i = 0; i < k; ++i) r *= BigInt(x - i);
  return r;
}

BigInt binomial_int(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  // Pascal recurrence, exact in BigInt
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, BigInt(0));
  row[0] = BigInt(1);
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

double normal_power_eigenvalue(int k, int n, double lambda) {
  if (n < 0) throw std::invalid_argument("normal_power_eigenvalue: n must be >= 0");
  if (k >= 0) {
    if (k > n) return 0.0;
    double r = std::pow(lambda, k);
    for (int i = 0; i < k; ++i) r *= double(n - i);
    return r;
  }
  const int m = -k;
  double r = std::pow(lambda, k);
  for (int i = 1; i <= m; ++i) r /= double(n + i);
  return r;
}

cplx OrdinaryPoly::eval(cplx rho) const {
  cplx r = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r * rho + coeffs[k];
  return r;
}

OrdinaryPoly normal_to_ordinary(const NormalPolySeries& p) {
  OrdinaryPoly q;
  q.coeffs.assign(p.coeffs.size(), cplx(0.0));
  StirlingTable table(static_cast<int>(p.coeffs.size()));
  for (std::size_t n = 0; n < p.coeffs.size(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const double s = table(static_cast<int>(n), static_cast<int>(k)).to_double();
      q.coeffs[k] += p.coeffs[n] * s * std::pow(p.lambda, double(n - k));
    }
  }
  return q;
}

cplx normal_exponential(cplx beta, int n, double lambda) {
  return std::pow(cplx(1.0) + lambda * beta, double(n));
}

cplx normal_exponential_series(cplx beta, int n, double lambda) {
  cplx sum = 0.0;
  cplx term = 1.0;  // beta^k / k! * lambda^k n!/(n-k)!  accumulated stepwise
  for (int k = 0; k <= n; ++k) {
    sum += term;
    term *= beta * lambda * double(n - k) / double(k + 1);
  }
  return sum;
}

cplx normal_power_times_exponential(int m, cplx beta, int n, double lambda) {
  const cplx base = cplx(1.0) + beta * lambda;
  if (m >= 0) {
    if (m > n) return 0.0;
    double ff = 1.0;
    for (int i = 0; i < m; ++i) ff *= double(n - i);
    return std::pow(lambda, m) * ff * std::pow(base, double(n - m));
  }
  const int mm = -m;
  double ff = 1.0;
  for (int i = 1; i <= mm; ++i) ff /= double(n + i);
  return std::pow(lambda, m) * ff * std::pow(base, double(n + mm));
}

cplx normal_power_times_exponential_series(int m, cplx beta, int n, double lambda) {
  // sum_k beta^k/k! * eigenvalue of :rho^(m+k):
  cplx sum = 0.0;
  cplx bk = 1.0;
  for (int k = 0; k <= n - std::min(m, 0) + 8; ++k) {
    const int p = m + k;
    if (p > n) break;  // higher terms vanish for p > n and stay zero after
    sum += bk * normal_power_eigenvalue(p, n, lambda);
    bk *= beta / double(k + 1);
  }
  return sum;
}

}  // namespace ncqm::ordering
