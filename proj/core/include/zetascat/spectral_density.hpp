#ifndef ZETASCAT_SPECTRAL_DENSITY_HPP
#define ZETASCAT_SPECTRAL_DENSITY_HPP

#include <string>
#include <variant>
#include <vector>

#include "zetascat/rational_function.hpp"

namespace zetascat {

/// Nonnegative density f on the unit circle, either in rational form
/// (f = |r(e^{i theta})|^2, automatically nonnegative) or as nonnegative
/// samples at theta_k = 2 pi k / N. total_mass() is gamma_0 = int f d theta / 2 pi.
class SpectralDensity {
public:
    static SpectralDensity from_rational(RationalFunction r);
    static SpectralDensity from_samples(std::vector<double> samples);

    bool is_rational() const;
    const RationalFunction& rational() const;
    const std::vector<double>& samples() const;

    double total_mass() const { return total_mass_; }

    /// f evaluated on a size-n circle grid (rational form evaluates |r|^2;
    /// sampled form requires n == samples().size()).
    std::vector<double> grid_values(int n) const;

private:
    SpectralDensity() = default;

    std::variant<RationalFunction, std::vector<double>> form_;
    double total_mass_ = 0.0;
};

struct SzegoResult {
    bool finite = false;
    /// int log f(theta) d theta / 2 pi, meaningful only when finite.
    double value = 0.0;
};

/// Szego integrability of log f. Rational densities are handled exactly
/// through the zeros and poles of r (isolated circle zeros integrate to a
/// finite value); sampled densities use the trapezoidal mean of log f and are
/// declared divergent as soon as any sample is nonpositive.
SzegoResult szego_condition(const SpectralDensity& f);

struct InnovationVerdict {
    bool purely_innovating = false;
    std::string reason;
};

/// True iff the density is absolutely continuous by construction and the
/// Szego condition holds.
InnovationVerdict purely_innovating(const SpectralDensity& f);

} // namespace zetascat

#endif
