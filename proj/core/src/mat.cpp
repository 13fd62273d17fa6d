#include "ncqm/mat.hpp"

#include <algorithm>
#include <cmath>

namespace ncqm {

Mat& Mat::operator+=(const Mat& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Mat& Mat::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

Mat matmul(const Mat& a, const Mat& b) {
  const std::size_t n = a.dim();
  Mat c(n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* arow = a.row(i);
    cplx* crow = c.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = arow[k];
      if (aik == cplx(0.0)) continue;
      const cplx* brow = b.row(k);
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

Mat dagger(const Mat& m) {
  const std::size_t n = m.dim();
  Mat d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(j, i) = std::conj(m(i, j));
  return d;
}

double max_abs(const Mat& m) {
  double r = 0.0;
  for (const auto& v : m.data()) r = std::max(r, std::abs(v));
  return r;
}

double max_abs_diff(const Mat& a, const Mat& b, const std::vector<bool>& keep) {
  const std::size_t n = a.dim();
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!keep[j]) continue;
      r = std::max(r, std::abs(a(i, j) - b(i, j)));
    }
  }
  return r;
}

SparseOp SparseOp::from_dense(const Mat& m, double tol) {
  const std::size_t n = m.dim();
  SparseOp s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(m(i, j)) > tol) s.insert(i, j, m(i, j));
  return s;
}

Mat SparseOp::to_dense() const {
  Mat m(n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (const auto& e : cols_[j]) m(e.row, j) += e.val;
  return m;
}

Mat SparseOp::apply_left(const Mat& m) const {
  Mat r(n_);
  for (std::size_t k = 0; k < n_; ++k) {
    for (const auto& e : cols_[k]) {
      // r[e.row, :] += e.val * m[k, :]
      cplx* dst = r.row(e.row);
      const cplx* src = m.row(k);
      for (std::size_t j = 0; j < n_; ++j) dst[j] += e.val * src[j];
    }
  }
  return r;
}

Mat SparseOp::apply_right(const Mat& m) const {
  Mat r(n_);
  for (std::size_t c = 0; c < n_; ++c) {
    for (const auto& e : cols_[c]) {
      // r[:, c] += e.val * m[:, e.row]
      for (std::size_t i = 0; i < n_; ++i) r(i, c) += e.val * m(i, e.row);
    }
  }
  return r;
}

Mat diag_left(const std::vector<cplx>& d, const Mat& m) {
  const std::size_t n = m.dim();
  Mat r(n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx di = d[i];
    const cplx* src = m.row(i);
    cplx* dst = r.row(i);
    for (std::size_t j = 0; j < n; ++j) dst[j] = di * src[j];
  }
  return r;
}

Mat diag_right(const Mat& m, const std::vector<cplx>& d) {
  const std::size_t n = m.dim();
  Mat r(n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx* src = m.row(i);
    cplx* dst = r.row(i);
    for (std::size_t j = 0; j < n; ++j) dst[j] = src[j] * d[j];
  }
  return r;
}

}  // namespace ncqm
