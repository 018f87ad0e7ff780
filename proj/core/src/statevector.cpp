#include "qaoa/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qaoa {

namespace {

void check_qubit(const Statevector& s, int q, const char* where)
{
    if (q < 0 || q >= s.n_qubits)
        throw std::invalid_argument(std::string(where) + ": qubit " + std::to_string(q) +
                                    " out of range for n=" + std::to_string(s.n_qubits));
}

// Applies a single Pauli factor in place.
void apply_pauli_factor(Statevector& s, int q, Pauli p)
{
    const std::uint64_t mask = 1ull << q;
    const std::uint64_t size = s.size();
    switch (p) {
    case Pauli::X:
        for (std::uint64_t base = 0; base < size; base += 2 * mask)
            for (std::uint64_t x = base; x < base + mask; ++x)
                std::swap(s.amps[x], s.amps[x | mask]);
        break;
    case Pauli::Y:
        // Y|0> = i|1>, Y|1> = -i|0>
        for (std::uint64_t base = 0; base < size; base += 2 * mask)
            for (std::uint64_t x = base; x < base + mask; ++x) {
                const complex_t a0 = s.amps[x];
                const complex_t a1 = s.amps[x | mask];
                s.amps[x] = complex_t(0.0, -1.0) * a1;
                s.amps[x | mask] = complex_t(0.0, 1.0) * a0;
            }
        break;
    case Pauli::Z:
        for (std::uint64_t x = 0; x < size; ++x)
            if (x & mask) s.amps[x] = -s.amps[x];
        break;
    }
}

} // namespace

double Statevector::norm() const
{
    double acc = 0.0;
    for (const complex_t& a : amps)
        acc += std::norm(a);
    return std::sqrt(acc);
}

complex_t Statevector::inner(const Statevector& a, const Statevector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("inner: dimension mismatch");
    complex_t acc{0.0, 0.0};
    for (std::size_t x = 0; x < a.size(); ++x)
        acc += std::conj(a.amps[x]) * b.amps[x];
    return acc;
}

Statevector plus_state(int n)
{
    if (n < 1 || n > kMaxQubits)
        throw std::invalid_argument("plus_state: n must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " + std::to_string(n));
    Statevector s;
    s.n_qubits = n;
    const double amp = std::pow(2.0, -0.5 * n);
    s.amps.assign(1ull << n, complex_t(amp, 0.0));
    return s;
}

void apply_rzz(Statevector& s, int i, int j, double phi)
{
    check_qubit(s, i, "apply_rzz");
    check_qubit(s, j, "apply_rzz");
    if (i == j)
        throw std::invalid_argument("apply_rzz: qubits must differ");
    const complex_t even = std::polar(1.0, -0.5 * phi); // equal bits
    const complex_t odd = std::polar(1.0, 0.5 * phi);   // unequal bits
    const std::uint64_t mi = 1ull << i;
    const std::uint64_t mj = 1ull << j;
    for (std::uint64_t x = 0; x < s.size(); ++x) {
        const bool equal = ((x & mi) != 0) == ((x & mj) != 0);
        s.amps[x] *= equal ? even : odd;
    }
}

void apply_rx(Statevector& s, int q, double theta)
{
    check_qubit(s, q, "apply_rx");
    const double c = std::cos(0.5 * theta);
    const complex_t f(0.0, -std::sin(0.5 * theta));
    const std::uint64_t mask = 1ull << q;
    for (std::uint64_t base = 0; base < s.size(); base += 2 * mask)
        for (std::uint64_t x = base; x < base + mask; ++x) {
            const complex_t a0 = s.amps[x];
            const complex_t a1 = s.amps[x | mask];
            s.amps[x] = c * a0 + f * a1;
            s.amps[x | mask] = f * a0 + c * a1;
        }
}

void apply_ry(Statevector& s, int q, double theta)
{
    check_qubit(s, q, "apply_ry");
    const double c = std::cos(0.5 * theta);
    const double t = std::sin(0.5 * theta);
    const std::uint64_t mask = 1ull << q;
    for (std::uint64_t base = 0; base < s.size(); base += 2 * mask)
        for (std::uint64_t x = base; x < base + mask; ++x) {
            const complex_t a0 = s.amps[x];
            const complex_t a1 = s.amps[x | mask];
            s.amps[x] = c * a0 - t * a1;
            s.amps[x | mask] = t * a0 + c * a1;
        }
}

void apply_cnot(Statevector& s, int control, int target)
{
    check_qubit(s, control, "apply_cnot");
    check_qubit(s, target, "apply_cnot");
    if (control == target)
        throw std::invalid_argument("apply_cnot: control and target must differ");
    const std::uint64_t mc = 1ull << control;
    const std::uint64_t mt = 1ull << target;
    for (std::uint64_t x = 0; x < s.size(); ++x)
        if ((x & mc) && !(x & mt))
            std::swap(s.amps[x], s.amps[x | mt]);
}

Statevector apply_pauli_sum(const Statevector& s, std::span<const PauliTerm> terms)
{
    for (const PauliTerm& t : terms)
        for (const auto& [q, p] : t.factors) {
            (void)p;
            check_qubit(s, q, "apply_pauli_sum");
        }

    Statevector out;
    out.n_qubits = s.n_qubits;
    out.amps.assign(s.size(), complex_t(0.0, 0.0));
    Statevector tmp;
    for (const PauliTerm& t : terms) {
        tmp = s;
        for (const auto& [q, p] : t.factors)
            apply_pauli_factor(tmp, q, p);
        for (std::size_t x = 0; x < out.size(); ++x)
            out.amps[x] += t.coeff * tmp.amps[x];
    }
    return out;
}

} // namespace qaoa
