#ifndef ZETASCAT_FACTORIZATION_HPP
#define ZETASCAT_FACTORIZATION_HPP

#include <vector>

#include "zetascat/blaschke.hpp"
#include "zetascat/rational_function.hpp"

namespace zetascat {

enum class Domain { disc, exterior };

struct OffendingRoot {
    enum class Kind { zero, pole };
    Complex location;
    Kind kind = Kind::pole;
    bool at_infinity = false;
};

/// Outcome of an inner-ness check: a rational function is inner with respect
/// to a domain when it is analytic there (no poles) and has unimodular
/// boundary values. The certificate lists every violation found.
struct InnernessCertificate {
    bool verdict = false;
    Domain domain = Domain::disc;
    std::vector<OffendingRoot> offending_roots;
    double max_modulus_deviation = 0.0;
};

/// Checks |r| = 1 on a circle grid and the pole condition for the requested
/// domain (the exterior domain includes z = infinity). Zeros or poles inside
/// the boundary band around |z| = 1 break unimodularity and are reported as
/// violations. Always returns a certificate; never throws for a nonzero r.
InnernessCertificate is_inner(const RationalFunction& r, Domain domain,
                              int grid_size = tol::inner_grid,
                              double modulus_tolerance = tol::inner_modulus);

/// psi = inner * outer with the outer part normalized real and positive at
/// the origin; all residual phase lives in the Blaschke constant. Zeros of
/// psi inside the boundary band around the circle carry no Blaschke factor
/// and stay in the outer part (recorded in boundary_zeros).
struct FactorizedFunction {
    BlaschkeProduct inner;
    RationalFunction outer;
    RationalFunction original;
    std::vector<Complex> boundary_zeros;

    /// Coefficient-level mismatch of inner * outer against original.
    double reconstruction_error() const;
};

/// Blaschke/outer factorization of a rational Hardy-class function. Throws
/// NotHardyError when psi has a pole in the closed unit disc (or within the
/// boundary band around the circle) and InvalidInputError for the zero
/// function.
FactorizedFunction factor_rational(const RationalFunction& psi);

} // namespace zetascat

#endif
