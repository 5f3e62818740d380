#include "zetascat/autocovariance.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "zetascat/errors.hpp"
#include "zetascat/laurent.hpp"

namespace zetascat {

AutocovarianceSequence::AutocovarianceSequence(std::vector<Complex> gamma,
                                               std::vector<double> standard_errors)
    : gamma_(std::move(gamma)), standard_errors_(std::move(standard_errors)) {
    if (gamma_.empty()) {
        throw InvalidInputError("AutocovarianceSequence: need at least gamma_0");
    }
    if (!(gamma_[0].real() > 0.0) || std::abs(gamma_[0].imag()) > 1e-9 * gamma_[0].real()) {
        throw InvalidInputError("AutocovarianceSequence: gamma_0 must be real and > 0");
    }
    if (!standard_errors_.empty() && standard_errors_.size() != gamma_.size()) {
        throw InvalidInputError(
            "AutocovarianceSequence: standard errors must match the lag range");
    }
}

Complex AutocovarianceSequence::at(int lag) const {
    const int j = std::abs(lag);
    if (j > max_lag()) {
        throw InvalidInputError("AutocovarianceSequence: lag out of range");
    }
    const Complex value = gamma_[static_cast<size_t>(j)];
    return lag < 0 ? std::conj(value) : value;
}

double AutocovarianceSequence::min_toeplitz_eigenvalue(int k) const {
    if (k < 0 || k > max_lag()) {
        throw InvalidInputError("AutocovarianceSequence: Toeplitz order out of range");
    }
    const int n = k + 1;
    Eigen::MatrixXcd toeplitz(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex v = at(i - j);
            toeplitz(i, j) = v;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(toeplitz,
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

AutocovarianceSequence autocovariance(const SpectralDensity& f, int max_lag) {
    if (max_lag < 0) {
        throw InvalidInputError("autocovariance: max_lag must be >= 0");
    }
    std::vector<Complex> gamma;
    if (f.is_rational()) {
        const RationalFunction& r = f.rational();
        const RationalFunction product = r * r.conjugate_reflection();
        gamma = laurent_coefficients(product, 0, max_lag);
    } else {
        const std::vector<double>& samples = f.samples();
        const auto n = static_cast<long long>(samples.size());
        gamma.resize(static_cast<size_t>(max_lag) + 1);
        for (int j = 0; j <= max_lag; ++j) {
            Complex acc(0.0, 0.0);
            for (long long k = 0; k < n; ++k) {
                acc += samples[static_cast<size_t>(k)] *
                       std::conj(unit_circle_point(j * k, n));
            }
            gamma[static_cast<size_t>(j)] = acc / static_cast<double>(n);
        }
    }
    return AutocovarianceSequence(std::move(gamma));
}

AutocovarianceSequence estimate_autocovariance(const std::vector<double>& path,
                                               int max_lag) {
    if (max_lag < 0) {
        throw InvalidInputError("estimate_autocovariance: max_lag must be >= 0");
    }
    const auto n = static_cast<long long>(path.size());
    if (n < 4LL * std::max(1, max_lag)) {
        throw InvalidInputError(
            "estimate_autocovariance: path too short (need length >= 4 * max_lag)");
    }

    // Estimate far enough past max_lag for the Bartlett variance sums.
    const int se_window = static_cast<int>(std::min<long long>(4LL * std::max(1, max_lag), n / 4));
    const int top = static_cast<int>(std::min<long long>(se_window + max_lag, n - 1));
    std::vector<double> raw(static_cast<size_t>(top) + 1, 0.0);
    for (int j = 0; j <= top; ++j) {
        double acc = 0.0;
        for (long long t = 0; t + j < n; ++t) {
            acc += path[static_cast<size_t>(t)] * path[static_cast<size_t>(t + j)];
        }
        raw[static_cast<size_t>(j)] = acc / static_cast<double>(n);
    }

    auto gamma_at = [&raw](int j) {
        const int a = std::abs(j);
        return a < static_cast<int>(raw.size()) ? raw[static_cast<size_t>(a)] : 0.0;
    };

    std::vector<Complex> gamma(static_cast<size_t>(max_lag) + 1);
    std::vector<double> se(static_cast<size_t>(max_lag) + 1);
    for (int j = 0; j <= max_lag; ++j) {
        gamma[static_cast<size_t>(j)] = Complex(raw[static_cast<size_t>(j)], 0.0);
        double var = 0.0;
        for (int k = -se_window; k <= se_window; ++k) {
            var += gamma_at(k) * gamma_at(k) + gamma_at(k + j) * gamma_at(k - j);
        }
        se[static_cast<size_t>(j)] = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    }
    return AutocovarianceSequence(std::move(gamma), std::move(se));
}

std::vector<double> bartlett_standard_errors(const AutocovarianceSequence& reference,
                                             long long n, int max_lag) {
    if (max_lag > reference.max_lag()) {
        throw InvalidInputError(
            "bartlett_standard_errors: reference sequence does not reach max_lag");
    }
    auto gamma_at = [&reference](int j) {
        return std::abs(j) <= reference.max_lag() ? reference.at(j).real() : 0.0;
    };
    std::vector<double> se(static_cast<size_t>(max_lag) + 1);
    const int window = reference.max_lag() - max_lag;
    for (int j = 0; j <= max_lag; ++j) {
        double var = 0.0;
        for (int k = -window; k <= window; ++k) {
            var += gamma_at(k) * gamma_at(k) + gamma_at(k + j) * gamma_at(k - j);
        }
        se[static_cast<size_t>(j)] = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    }
    return se;
}

} // namespace zetascat
