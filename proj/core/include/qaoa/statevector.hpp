#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qaoa {

using complex_t = std::complex<double>;

/// Dense 2^n statevector. Qubit 0 is the least-significant bit of the basis
/// index. Gate operations mutate in place; distinct vectors share nothing.
struct Statevector {
    int n_qubits = 0;
    std::vector<complex_t> amps;

    std::size_t size() const { return amps.size(); }
    double norm() const;

    /// <a|b> with the left argument conjugated.
    static complex_t inner(const Statevector& a, const Statevector& b);
};

/// Maximum supported qubit count (dense storage guard).
inline constexpr int kMaxQubits = 14;

/// |+>^n: all amplitudes 2^(-n/2). Requires 1 <= n <= kMaxQubits.
Statevector plus_state(int n);

/// RZZ(phi) = exp(-i (phi/2) Z_i Z_j): equal bits at (i,j) pick up
/// exp(-i phi/2), unequal bits exp(+i phi/2).
void apply_rzz(Statevector& s, int i, int j, double phi);

/// RX(theta) = exp(-i (theta/2) X_q).
void apply_rx(Statevector& s, int q, double theta);

/// RY(theta) = exp(-i (theta/2) Y_q).
void apply_ry(Statevector& s, int q, double theta);

/// Flips the target bit where the control bit is 1.
void apply_cnot(Statevector& s, int control, int target);

enum class Pauli { X, Y, Z };

/// One weighted Pauli string: coeff * prod_k P_k on qubit q_k.
struct PauliTerm {
    complex_t coeff{1.0, 0.0};
    std::vector<std::pair<int, Pauli>> factors;
};

/// Returns sum_t c_t P_t |s>. The result is generally not unit norm.
Statevector apply_pauli_sum(const Statevector& s, std::span<const PauliTerm> terms);

} // namespace qaoa
