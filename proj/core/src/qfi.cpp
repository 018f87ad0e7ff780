#include "qaoa/qfi.hpp"

#include "qaoa/jacobi.hpp"
#include "qaoa/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qaoa {

double QfiMatrix::trace() const
{
    double acc = 0.0;
    for (int i = 0; i < dim; ++i)
        acc += at(i, i);
    return acc;
}

QgtMatrix qgt_from_states(const Statevector& psi, const std::vector<Statevector>& derivs)
{
    const int m = static_cast<int>(derivs.size());
    QgtMatrix tau;
    tau.dim = m;
    tau.data.assign(static_cast<std::size_t>(m) * m, complex_t(0.0, 0.0));

    std::vector<complex_t> berry(static_cast<std::size_t>(m)); // <d_i psi|psi>
    for (int i = 0; i < m; ++i)
        berry[static_cast<std::size_t>(i)] = Statevector::inner(derivs[static_cast<std::size_t>(i)], psi);

    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            const complex_t overlap =
                Statevector::inner(derivs[static_cast<std::size_t>(i)], derivs[static_cast<std::size_t>(j)]);
            const complex_t value = overlap - berry[static_cast<std::size_t>(i)] *
                                                  std::conj(berry[static_cast<std::size_t>(j)]);
            tau.at(i, j) = value;
            tau.at(j, i) = std::conj(value);
        }
    }
    return tau;
}

QgtMatrix qgt(const AnsatzSpec& spec, const ParameterVector& params)
{
    const Statevector psi = prepare_state(spec, params);
    const int m = spec.param_count();
    std::vector<Statevector> derivs;
    derivs.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        derivs.push_back(derivative_state(spec, params, k));
    return qgt_from_states(psi, derivs);
}

QfiMatrix qfi_from_qgt(const QgtMatrix& tau)
{
    QfiMatrix f;
    f.dim = tau.dim;
    f.data.assign(static_cast<std::size_t>(tau.dim) * tau.dim, 0.0);
    for (int i = 0; i < tau.dim; ++i)
        for (int j = 0; j < tau.dim; ++j)
            f.at(i, j) = 4.0 * tau.at(i, j).real();
    // (F + F^T)/2 purges rounding-level asymmetry.
    for (int i = 0; i < f.dim; ++i)
        for (int j = i + 1; j < f.dim; ++j) {
            const double s = 0.5 * (f.at(i, j) + f.at(j, i));
            f.at(i, j) = s;
            f.at(j, i) = s;
        }
    return f;
}

QfiMatrix qfi_matrix(const AnsatzSpec& spec, const ParameterVector& params)
{
    return qfi_from_qgt(qgt(spec, params));
}

QfiMatrix qfi_fd_oracle(const AnsatzSpec& spec, const ParameterVector& params, double eps)
{
    if (!(eps >= 1e-6 && eps <= 1e-3))
        throw std::invalid_argument("qfi_fd_oracle: eps must be in [1e-6, 1e-3]");
    spec.validate();
    const int m = spec.param_count();
    if (static_cast<int>(params.size()) != m)
        throw std::invalid_argument("qfi_fd_oracle: parameter length mismatch");

    const Statevector base = prepare_state(spec, params);
    const auto fidelity = [&](int i, double si, int j, double sj) {
        ParameterVector shifted = params;
        shifted[static_cast<std::size_t>(i)] += si * eps;
        shifted[static_cast<std::size_t>(j)] += sj * eps;
        const Statevector moved = prepare_state(spec, shifted);
        return std::norm(Statevector::inner(base, moved));
    };

    QfiMatrix f;
    f.dim = m;
    f.data.assign(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            // |<psi|psi'>|^2 = 1 - (1/4) delta^T F delta + O(delta^3), so the
            // mixed second difference recovers F_ij.
            const double fpp = fidelity(i, 1.0, j, 1.0);
            const double fpm = fidelity(i, 1.0, j, -1.0);
            const double fmp = fidelity(i, -1.0, j, 1.0);
            const double fmm = fidelity(i, -1.0, j, -1.0);
            const double value = (fpm + fmp - fpp - fmm) / (2.0 * eps * eps);
            f.at(i, j) = value;
            f.at(j, i) = value;
        }
    }
    return f;
}

double covariance_fraction(const QfiMatrix& f)
{
    const double tr = f.trace();
    if (!(tr > 1e-12))
        throw std::domain_error("covariance_fraction: trace is not positive");
    double off = 0.0;
    for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j)
            if (i != j)
                off += std::abs(f.at(i, j));
    return off / tr;
}

std::pair<double, double> eigen_extremes(const QfiMatrix& f)
{
    if (f.dim > 16)
        throw std::invalid_argument("eigen_extremes: matrix larger than supported (16)");
    const std::vector<double> eigs = jacobi_eigenvalues(f.dim, f.data);
    return {eigs.back(), eigs.front()};
}

QfiSummary summarize(const QfiMatrix& f)
{
    const auto [me, le] = eigen_extremes(f);
    QfiSummary s;
    s.max_eig = me;
    s.min_eig = le;
    s.trace = f.trace();
    s.cov_fraction = covariance_fraction(f);
    return s;
}

AveragedQfi averaged_qfi(const AnsatzSpec& spec, int n_samples, std::uint64_t seed)
{
    if (n_samples < 1)
        throw std::invalid_argument("averaged_qfi: n_samples must be >= 1");
    spec.validate();
    const int m = spec.param_count();

    QfiMatrix mean;
    mean.dim = m;
    mean.data.assign(static_cast<std::size_t>(m) * m, 0.0);

    // Per-sample parameter vectors come from substreams of (seed, sample), so
    // the sample set is independent of evaluation order.
    for (int s = 0; s < n_samples; ++s) {
        Rng rng(derive_stream(seed, static_cast<std::uint64_t>(s)));
        ParameterVector params(static_cast<std::size_t>(m));
        for (double& p : params)
            p = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const QfiMatrix f = qfi_matrix(spec, params);
        for (std::size_t x = 0; x < mean.data.size(); ++x)
            mean.data[x] += f.data[x];
    }
    const double inv = 1.0 / static_cast<double>(n_samples);
    for (double& v : mean.data)
        v *= inv;

    AveragedQfi out;
    out.summary = summarize(mean);
    out.matrix = std::move(mean);
    return out;
}

nlohmann::ordered_json qfi_result_json(const AnsatzSpec& spec, int n_samples,
                                       std::uint64_t seed, const QfiMatrix& f,
                                       const QfiSummary& summary)
{
    nlohmann::ordered_json config;
    to_json(config, spec);

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < f.dim; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < f.dim; ++j)
            row.push_back(f.at(i, j));
        rows.push_back(std::move(row));
    }

    return nlohmann::ordered_json{
        {"config", std::move(config)},
        {"n_samples", n_samples},
        {"seed", seed},
        {"qfi", std::move(rows)},
        {"summary",
         {{"max_eig", summary.max_eig},
          {"min_eig", summary.min_eig},
          {"trace", summary.trace},
          {"cov_fraction", summary.cov_fraction}}},
    };
}

} // namespace qaoa
