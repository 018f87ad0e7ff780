#include "qaoa/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qaoa {

namespace {

double off_diagonal_norm(int n, const std::vector<double>& a)
{
    double acc = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            acc += 2.0 * a[p * n + q] * a[p * n + q];
    return std::sqrt(acc);
}

} // namespace

std::vector<double> jacobi_eigenvalues(int dim, std::span<const double> sym_row_major)
{
    if (dim <= 0)
        throw std::invalid_argument("jacobi_eigenvalues: dim must be positive");
    if (sym_row_major.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("jacobi_eigenvalues: matrix size mismatch");
    for (double v : sym_row_major)
        if (!std::isfinite(v))
            throw std::domain_error("jacobi_eigenvalues: non-finite entry");

    std::vector<double> a(sym_row_major.begin(), sym_row_major.end());
    const int n = dim;
    constexpr double kOffTol = 1e-12;
    constexpr int kMaxSweeps = 100;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(n, a) <= kOffTol)
            break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0)
                    continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q)
                        continue;
                    const double arp = a[r * n + p];
                    const double arq = a[r * n + q];
                    a[r * n + p] = arp - s * (arq + tau * arp);
                    a[p * n + r] = a[r * n + p];
                    a[r * n + q] = arq + s * (arp - tau * arq);
                    a[q * n + r] = a[r * n + q];
                }
            }
        }
    }

    std::vector<double> eigs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        eigs[static_cast<std::size_t>(i)] = a[i * n + i];
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

} // namespace qaoa
