#include "zetascat/cepstral.hpp"

#include <cmath>

#include "zetascat/errors.hpp"
#include "zetascat/fft.hpp"

namespace zetascat {

CepstralOuter outer_from_density(const SpectralDensity& f, int grid_size) {
    std::vector<double> values;
    if (f.is_rational()) {
        if (!fft::is_power_of_two(static_cast<size_t>(grid_size))) {
            throw InvalidInputError("outer_from_density: grid size must be a power of two");
        }
        values = f.grid_values(grid_size);
    } else {
        values = f.samples();
        if (!fft::is_power_of_two(values.size())) {
            throw InvalidInputError(
                "outer_from_density: sampled density grid must be a power of two");
        }
    }
    for (double v : values) {
        if (v <= 0.0) {
            throw DegenerateDensityError(
                "outer_from_density: density has a nonpositive sample; regularize it "
                "or use the rational path");
        }
    }
    const SzegoResult szego = szego_condition(f);
    if (!szego.finite) {
        throw NotPurelyInnovatingError(
            "outer_from_density: Szego integral diverges; no outer factor exists");
    }

    const size_t n = values.size();
    std::vector<Complex> spectrum(n);
    for (size_t k = 0; k < n; ++k) spectrum[k] = Complex(std::log(values[k]), 0.0);
    fft::transform(spectrum, false);
    for (Complex& c : spectrum) c /= static_cast<double>(n);

    // Analytic completion of (1/2) log f: keep nonnegative frequencies, halve
    // the shared zero and Nyquist bins, drop the rest.
    std::vector<Complex> analytic(n, Complex(0.0, 0.0));
    analytic[0] = 0.5 * spectrum[0];
    for (size_t m = 1; m < n / 2; ++m) analytic[m] = spectrum[m];
    if (n >= 2) analytic[n / 2] = 0.5 * spectrum[n / 2];
    fft::transform(analytic, true);

    CepstralOuter result;
    result.samples.resize(n);
    double worst = 0.0;
    for (size_t k = 0; k < n; ++k) {
        result.samples[k] = std::exp(analytic[k]);
        worst = std::max(worst, std::abs(std::norm(result.samples[k]) - values[k]));
    }
    result.modulus_error = worst;
    return result;
}

} // namespace zetascat
