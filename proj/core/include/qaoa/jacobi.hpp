#pragma once

#include <span>
#include <vector>

namespace qaoa {

/// Eigenvalues of a dense symmetric matrix (row-major, dim x dim), ascending.
///
/// Cyclic Jacobi: sweeps over all upper off-diagonal entries until the
/// off-diagonal Frobenius norm drops below 1e-12, capped at 100 sweeps.
/// Intended for the small matrices this project produces (dim <= 16).
std::vector<double> jacobi_eigenvalues(int dim, std::span<const double> sym_row_major);

} // namespace qaoa
