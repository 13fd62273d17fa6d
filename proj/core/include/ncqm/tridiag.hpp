#pragma once

#include <vector>

namespace ncqm {

// Eigendecomposition of a real symmetric tridiagonal matrix by the implicit
// shift QL algorithm (tql2 lineage). On return `diag` holds the eigenvalues
// in ascending order and, when `vectors` is non-null, its columns hold the
// matching orthonormal eigenvectors. `offdiag` is destroyed.
//
// diag: length n; offdiag: length n (offdiag[0..n-2] used).
// Throws std::runtime_error when an eigenvalue fails to converge.
void tridiag_ql(std::vector<double>& diag, std::vector<double>& offdiag,
                std::vector<std::vector<double>>* vectors);

}  // namespace ncqm
