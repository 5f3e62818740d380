#ifndef ZETASCAT_ROOTS_HPP
#define ZETASCAT_ROOTS_HPP

#include <vector>

#include "zetascat/complex_polynomial.hpp"
#include "zetascat/tolerances.hpp"

namespace zetascat {

struct Root {
    Complex location;
    int multiplicity = 1;
};

/// All complex roots of a polynomial, with multiplicities recovered by
/// clustering, plus the worst residual |p(root)| attained.
struct RootSet {
    std::vector<Root> roots;
    double residual = 0.0;

    int total_multiplicity() const;
    /// Roots repeated according to multiplicity, in stored order.
    std::vector<Complex> flattened() const;
};

struct RootOptions {
    double iteration_tolerance = tol::root_iteration;
    int max_iterations = tol::root_max_iterations;
    double cluster_radius = tol::root_cluster_radius;
    double residual_tolerance = tol::root_residual;
};

/// Simultaneous (Aberth-Ehrlich) iteration with a companion-matrix fallback.
/// Multiplicities come from clustering; clustered roots are re-polished on
/// the (m-1)-th derivative so exact multiple roots are recovered to full
/// precision. Throws InvalidInputError for degree < 1 and
/// NumericalFailureError (message carries the best iterate) when neither
/// method meets the residual tolerance.
RootSet find_roots(const ComplexPolynomial& p, const RootOptions& options = {});

/// leading * prod (z - root)^multiplicity; inverse of find_roots up to
/// floating-point error.
ComplexPolynomial polynomial_from_rootset(const RootSet& roots, Complex leading);

} // namespace zetascat

#endif
