#include "ncqm/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace ncqm::fock {

FockSpace::FockSpace(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("FockSpace: n_max must be >= 0");
  basis_.reserve(dimension(n_max));
  for (int n = 0; n <= n_max; ++n)
    for (int n1 = 0; n1 <= n; ++n1) basis_.push_back({n1, n - n1});
}

std::size_t FockSpace::index_of(const FockIndex& f) const {
  const int n = f.total();
  if (f.n1 < 0 || f.n2 < 0 || n > n_max_)
    throw std::out_of_range("FockSpace::index_of: state outside truncation");
  return block_start(n) + static_cast<std::size_t>(f.n1);
}

FockSpace build_space(int n_max) { return FockSpace(n_max); }

SparseOp ladder_sparse(const FockSpace& space, Ladder kind) {
  const std::size_t d = space.dim();
  SparseOp op(d);
  for (std::size_t j = 0; j < d; ++j) {
    const FockIndex& s = space.state(j);
    switch (kind) {
      case Ladder::a1:
        if (s.n1 > 0)
          op.insert(space.index_of({s.n1 - 1, s.n2}), j, std::sqrt(double(s.n1)));
        break;
      case Ladder::a2:
        if (s.n2 > 0)
          op.insert(space.index_of({s.n1, s.n2 - 1}), j, std::sqrt(double(s.n2)));
        break;
      case Ladder::a1_dag:
        if (s.total() + 1 <= space.n_max())
          op.insert(space.index_of({s.n1 + 1, s.n2}), j, std::sqrt(double(s.n1 + 1)));
        break;
      case Ladder::a2_dag:
        if (s.total() + 1 <= space.n_max())
          op.insert(space.index_of({s.n1, s.n2 + 1}), j, std::sqrt(double(s.n2 + 1)));
        break;
      case Ladder::number:
        op.insert(j, j, double(s.total()));
        break;
    }
  }
  return op;
}

Mat ladder(const FockSpace& space, Ladder kind) { return ladder_sparse(space, kind).to_dense(); }

std::vector<std::size_t> valid_window(const FockSpace& space, int degree) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < space.dim(); ++i)
    if (space.state(i).total() <= space.n_max() - degree) w.push_back(i);
  return w;
}

std::vector<bool> window_mask(const FockSpace& space, int degree) {
  std::vector<bool> m(space.dim(), false);
  for (std::size_t i = 0; i < space.dim(); ++i)
    m[i] = space.state(i).total() <= space.n_max() - degree;
  return m;
}

}  // namespace ncqm::fock
