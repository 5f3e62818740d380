#ifndef ZETASCAT_LAURENT_HPP
#define ZETASCAT_LAURENT_HPP

#include <vector>

#include "zetascat/rational_function.hpp"

namespace zetascat {

/// Laurent coefficients e_m of r on the annulus that contains |z| = 1, for
/// m in [m_min, m_max] (result[i] corresponds to m = m_min + i). Computed by
/// exact partial fractions over the poles: poles inside the circle expand in
/// negative powers, poles outside in nonnegative powers, and the polynomial
/// part contributes directly. Throws PoleOnBoundaryError when a pole lies in
/// the guard band around the circle.
std::vector<Complex> laurent_coefficients(const RationalFunction& r, int m_min,
                                          int m_max);

} // namespace zetascat

#endif
