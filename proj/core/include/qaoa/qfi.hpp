#pragma once

#include "qaoa/ansatz.hpp"
#include "qaoa/statevector.hpp"

#include <nlohmann/json.hpp>

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace qaoa {

/// Quantum geometric tensor tau_ij = <d_i psi|d_j psi> - <d_i psi|psi><psi|d_j psi>.
/// Hermitian by construction (upper triangle computed, lower mirrored).
struct QgtMatrix {
    int dim = 0;
    std::vector<complex_t> data; // row-major

    complex_t at(int i, int j) const { return data[static_cast<std::size_t>(i) * dim + j]; }
    complex_t& at(int i, int j) { return data[static_cast<std::size_t>(i) * dim + j]; }
};

/// Real symmetric QFI matrix, F = 4 Re(tau), symmetrized on construction.
struct QfiMatrix {
    int dim = 0;
    std::vector<double> data; // row-major

    double at(int i, int j) const { return data[static_cast<std::size_t>(i) * dim + j]; }
    double& at(int i, int j) { return data[static_cast<std::size_t>(i) * dim + j]; }
    double trace() const;
};

struct QfiSummary {
    double max_eig = 0.0;
    double min_eig = 0.0;
    double trace = 0.0;
    double cov_fraction = 0.0;
};

QgtMatrix qgt(const AnsatzSpec& spec, const ParameterVector& params);

/// QGT from an already prepared state and its m derivative states. Exposed so
/// tests can inject transformed states (e.g. a global phase) on both sides.
QgtMatrix qgt_from_states(const Statevector& psi, const std::vector<Statevector>& derivs);

QfiMatrix qfi_from_qgt(const QgtMatrix& tau);

QfiMatrix qfi_matrix(const AnsatzSpec& spec, const ParameterVector& params);

/// Independent finite-difference check: F_ij from central differences of the
/// squared overlap |<psi(theta)|psi(theta + delta)>|^2 over the four sign
/// combinations of (+-eps e_i, +-eps e_j). Requires eps in [1e-6, 1e-3].
QfiMatrix qfi_fd_oracle(const AnsatzSpec& spec, const ParameterVector& params, double eps);

/// r = sum_{i != j} |F_ij| / sum_i F_ii. Requires trace(F) > 1e-12.
double covariance_fraction(const QfiMatrix& f);

/// (max eigenvalue, min eigenvalue) via the dense Jacobi solver.
std::pair<double, double> eigen_extremes(const QfiMatrix& f);

/// Summary (max/min eigenvalue, trace, covariance fraction) of one matrix.
QfiSummary summarize(const QfiMatrix& f);

struct AveragedQfi {
    QfiMatrix matrix;
    QfiSummary summary; // computed on the averaged matrix
};

/// Element-wise mean of QFI matrices over n_samples parameter vectors drawn
/// i.i.d. uniform [0, 2*pi) from per-sample streams derived from the seed.
/// Deterministic: same (spec, n_samples, seed) gives bit-identical results.
AveragedQfi averaged_qfi(const AnsatzSpec& spec, int n_samples, std::uint64_t seed);

/// {"config":..., "n_samples":..., "seed":..., "qfi":[[...]], "summary":{...}}
nlohmann::ordered_json qfi_result_json(const AnsatzSpec& spec, int n_samples,
                                       std::uint64_t seed, const QfiMatrix& f,
                                       const QfiSummary& summary);

} // namespace qaoa
