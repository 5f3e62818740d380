#ifndef ZETASCAT_AUTOCOVARIANCE_HPP
#define ZETASCAT_AUTOCOVARIANCE_HPP

#include <vector>

#include "zetascat/spectral_density.hpp"

namespace zetascat {

/// Autocovariances gamma_0..gamma_max_lag; gamma_{-j} = conj(gamma_j) is
/// implied. Estimated sequences also carry per-lag standard errors.
class AutocovarianceSequence {
public:
    explicit AutocovarianceSequence(std::vector<Complex> gamma,
                                    std::vector<double> standard_errors = {});

    int max_lag() const { return static_cast<int>(gamma_.size()) - 1; }
    /// gamma_j for any integer j in [-max_lag, max_lag].
    Complex at(int lag) const;
    const std::vector<Complex>& values() const { return gamma_; }

    bool has_standard_errors() const { return !standard_errors_.empty(); }
    const std::vector<double>& standard_errors() const { return standard_errors_; }

    /// Smallest eigenvalue of the (k+1) x (k+1) Toeplitz matrix built from
    /// lags 0..k; >= -tolerance certifies positive semidefiniteness.
    double min_toeplitz_eigenvalue(int k) const;

private:
    std::vector<Complex> gamma_;
    std::vector<double> standard_errors_;
};

/// gamma_j = int e^{-i j theta} f(theta) d theta / 2 pi. Rational densities
/// go through exact Laurent coefficients of r * r~; sampled densities use the
/// discrete transform.
AutocovarianceSequence autocovariance(const SpectralDensity& f, int max_lag);

/// Biased estimator gamma_hat_j = (1/n) sum_t x_t x_{t+j} with Bartlett
/// standard errors. Requires path.size() >= 4 * max_lag.
AutocovarianceSequence estimate_autocovariance(const std::vector<double>& path,
                                               int max_lag);

/// Bartlett standard errors for lags 0..max_lag of an estimate over n points,
/// computed from a reference (analytic) autocovariance sequence. The
/// reference must extend at least to lag max_lag; lags beyond its range are
/// treated as zero.
std::vector<double> bartlett_standard_errors(const AutocovarianceSequence& reference,
                                             long long n, int max_lag);

} // namespace zetascat

#endif
