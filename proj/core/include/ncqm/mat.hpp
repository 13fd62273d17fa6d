#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ncqm {

using cplx = std::complex<double>;

// Dense complex square matrix, row-major. Sized for truncated Fock spaces
// (dim <= ~1000); nothing here tries to be clever.
class Mat {
public:
  Mat() = default;
  explicit Mat(std::size_t n) : n_(n), a_(n * n, cplx(0.0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return n_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  cplx* row(std::size_t i) { return a_.data() + i * n_; }
  const cplx* row(std::size_t i) const { return a_.data() + i * n_; }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(cplx s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(cplx s, Mat a) { return a *= s; }

  const std::vector<cplx>& data() const { return a_; }
  std::vector<cplx>& data() { return a_; }

private:
  std::size_t n_ = 0;
  std::vector<cplx> a_;
};

Mat matmul(const Mat& a, const Mat& b);
Mat dagger(const Mat& m);
double max_abs(const Mat& m);
// max |a - b| over entries whose row AND column indices pass `keep`.
double max_abs_diff(const Mat& a, const Mat& b, const std::vector<bool>& keep);

// Column-sparse complex operator: column j holds a short list of (row, value)
// entries. Ladder and coordinate matrices have at most two entries per column,
// which makes super-operator application O(dim^2) instead of O(dim^3).
class SparseOp {
public:
  SparseOp() = default;
  explicit SparseOp(std::size_t n) : n_(n), cols_(n) {}

  static SparseOp from_dense(const Mat& m, double tol = 0.0);

  std::size_t dim() const { return n_; }
  void insert(std::size_t row, std::size_t col, cplx v) { cols_[col].push_back({row, v}); }

  Mat to_dense() const;

  // L * M
  Mat apply_left(const Mat& m) const;
  // M * L
  Mat apply_right(const Mat& m) const;

private:
  struct Entry {
    std::size_t row;
    cplx val;
  };
  std::size_t n_ = 0;
  std::vector<std::vector<Entry>> cols_;
};

// Diagonal multiplications: diag(d) * M and M * diag(d).
Mat diag_left(const std::vector<cplx>& d, const Mat& m);
Mat diag_right(const Mat& m, const std::vector<cplx>& d);

}  // namespace ncqm
