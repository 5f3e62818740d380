#ifndef ZETASCAT_TOLERANCES_HPP
#define ZETASCAT_TOLERANCES_HPP

namespace zetascat {

// Numerical policy shared across the library. Degrees stay tiny (<= 2g+4 in
// the zeta application) so every default favours robustness over speed.
namespace tol {

/// Relative stopping tolerance of the simultaneous root iteration.
inline constexpr double root_iteration = 1e-13;

/// Maximum simultaneous-iteration sweeps before the companion fallback.
inline constexpr int root_max_iterations = 200;

/// Roots closer than this are treated as one root with higher multiplicity.
inline constexpr double root_cluster_radius = 1e-8;

/// Relative backward-error bound accepted for a converged root.
inline constexpr double root_residual = 1e-10;

/// Common num/den roots closer than this cancel during rational reduction.
inline constexpr double rational_reduce = 1e-10;

/// Half-width of the band around |z| = 1 that counts as "on the circle".
inline constexpr double boundary_band = 1e-9;

/// Pole-proximity guard for evaluating rational functions on the circle.
inline constexpr double circle_pole_guard = 1e-9;

/// Allowed deviation of | |value| - 1 | for inner-ness certification.
inline constexpr double inner_modulus = 1e-8;

/// Default grid size for circle-modulus checks.
inline constexpr int inner_grid = 1 << 10;

/// Default grid size for the cepstral outer factorization.
inline constexpr int cepstral_grid = 1 << 14;

/// Root-modulus tolerance of the Riemann-hypothesis root test.
inline constexpr double rh_root_moduli = 1e-9;

} // namespace tol

} // namespace zetascat

#endif
