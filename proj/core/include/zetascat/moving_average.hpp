#ifndef ZETASCAT_MOVING_AVERAGE_HPP
#define ZETASCAT_MOVING_AVERAGE_HPP

#include <cstdint>
#include <vector>

#include "zetascat/spectral_density.hpp"

namespace zetascat {

enum class NoiseKind { gaussian, rademacher };

/// Finitely supported moving-average weights c_k on [k_min, k_max]; the
/// process is X_n = sum_k c_k Y_{n-k} against unit white noise. One-sided
/// models carry the declared truncation tail bound of the representation they
/// approximate (0 when exact).
class MovingAverageModel {
public:
    static MovingAverageModel bi_sided(int k_min, std::vector<Complex> coefficients);
    static MovingAverageModel one_sided(std::vector<Complex> coefficients,
                                        double tail_bound = 0.0);

    int k_min() const { return k_min_; }
    int k_max() const { return k_min_ + static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<Complex>& coefficients() const { return coefficients_; }
    Complex coeff(int k) const;
    bool is_one_sided() const { return k_min_ >= 0; }
    double tail_bound() const { return tail_bound_; }

    /// Spectral density |psi(1/z)|^2 of the process, psi(z) = sum c_k z^k.
    SpectralDensity spectral_density() const;

private:
    MovingAverageModel(int k_min, std::vector<Complex> coefficients, double tail_bound);

    int k_min_ = 0;
    std::vector<Complex> coefficients_;
    double tail_bound_ = 0.0;
};

/// Counter-based white noise: the sample at (seed, index) is a pure function
/// of its arguments, so paths can be generated in chunks, in any order, with
/// identical results. Gaussian uses Box-Muller on two derived words;
/// rademacher returns +-1.
double white_noise_sample(std::uint64_t seed, std::uint64_t index, NoiseKind kind);

struct SamplePath {
    std::vector<double> values;
    std::uint64_t seed = 0;
    NoiseKind noise_kind = NoiseKind::gaussian;
};

/// Deterministic path of length n. The noise window is materialized over the
/// full support of the model so every emitted value uses a complete
/// coefficient window (the burn-in at both ends is discarded). Requires a
/// real-coefficient model with nonempty support.
SamplePath synthesize(const MovingAverageModel& model, long long n,
                      std::uint64_t seed, NoiseKind kind);

/// Taylor coefficients c_0..c_truncation of the outer factor of f: the
/// one-sided innovations representation of Wold theory. Throws
/// NotPurelyInnovatingError when the Szego condition fails. The returned
/// tail bound is the geometric estimate from the outer factor's smallest
/// exterior pole (rational path) or the summed discarded coefficients
/// (sampled path).
MovingAverageModel one_sided_representation(const SpectralDensity& f, int truncation);

} // namespace zetascat

#endif
