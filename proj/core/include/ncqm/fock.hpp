#pragma once

#include <cstddef>
#include <vector>

#include "ncqm/mat.hpp"

namespace ncqm::fock {

// One basis vector |n1, n2> of the two-mode bosonic Fock space.
struct FockIndex {
  int n1 = 0;
  int n2 = 0;
  int total() const { return n1 + n2; }
  friend bool operator==(const FockIndex&, const FockIndex&) = default;
};

enum class Ladder { a1, a2, a1_dag, a2_dag, number };

// Two-mode Fock space truncated at total quanta n_max. Basis ordering is
// fixed (ascending total n, then ascending n1) so that matrix layouts and
// report files are reproducible across runs.
class FockSpace {
public:
  explicit FockSpace(int n_max);

  int n_max() const { return n_max_; }
  std::size_t dim() const { return basis_.size(); }

  const FockIndex& state(std::size_t i) const { return basis_[i]; }
  const std::vector<FockIndex>& basis() const { return basis_; }

  // Dense position of |n1, n2>; requires n1 + n2 <= n_max.
  std::size_t index_of(const FockIndex& f) const;

  // First basis position of the total-quanta-n block; block size is n + 1.
  std::size_t block_start(int n) const { return static_cast<std::size_t>(n) * (n + 1) / 2; }

  static std::size_t dimension(int n_max) {
    return static_cast<std::size_t>(n_max + 1) * (n_max + 2) / 2;
  }

private:
  int n_max_;
  std::vector<FockIndex> basis_;
};

FockSpace build_space(int n_max);

// Matrix of a ladder operator on the truncated basis. Raising components
// that would leave the truncation are dropped.
Mat ladder(const FockSpace& space, Ladder kind);
SparseOp ladder_sparse(const FockSpace& space, Ladder kind);

// Basis positions with total quanta <= n_max - degree; the sub-basis on
// which identities built from `degree` gross ladder factors are exact.
std::vector<std::size_t> valid_window(const FockSpace& space, int degree);
// Same set as a dense keep-mask over basis positions.
std::vector<bool> window_mask(const FockSpace& space, int degree);

}  // namespace ncqm::fock
