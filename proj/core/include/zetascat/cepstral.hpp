#ifndef ZETASCAT_CEPSTRAL_HPP
#define ZETASCAT_CEPSTRAL_HPP

#include <vector>

#include "zetascat/spectral_density.hpp"
#include "zetascat/tolerances.hpp"

namespace zetascat {

struct CepstralOuter {
    /// Boundary samples of the outer function on the circle grid.
    std::vector<Complex> samples;
    /// Declared discretization-error model: max over the grid of
    /// | |outer|^2 - f |.
    double modulus_error = 0.0;
};

/// Szego outer function by the cepstral method: the analytic completion of
/// (1/2) log f is formed by zeroing negative-frequency coefficients (halving
/// the zero and Nyquist modes) and exponentiated. The result satisfies
/// |outer|^2 = f on the grid up to rounding and outer(0) > 0 by construction.
/// Sampled densities use their own grid and must be strictly positive
/// (DegenerateDensityError otherwise); rational densities are sampled at
/// grid_size, which must be a power of two.
CepstralOuter outer_from_density(const SpectralDensity& f,
                                 int grid_size = tol::cepstral_grid);

} // namespace zetascat

#endif
