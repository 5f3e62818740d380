#include "zetascat/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zetascat/errors.hpp"

namespace zetascat {

namespace {

bool in_boundary_band(Complex location) {
    return std::abs(std::abs(location) - 1.0) <= tol::boundary_band;
}

} // namespace

InnernessCertificate is_inner(const RationalFunction& r, Domain domain,
                              int grid_size, double modulus_tolerance) {
    if (r.is_zero()) {
        throw InvalidInputError("is_inner: the zero function is not inner");
    }
    InnernessCertificate cert;
    cert.domain = domain;

    // Zeros and poles in the boundary band break |r| = 1 regardless of domain.
    for (const Root& z : r.zeros()) {
        if (in_boundary_band(z.location)) {
            cert.offending_roots.push_back({z.location, OffendingRoot::Kind::zero, false});
        }
    }
    for (const Root& p : r.poles()) {
        const double modulus = std::abs(p.location);
        const bool boundary = in_boundary_band(p.location);
        const bool interior = modulus < 1.0 - tol::boundary_band;
        const bool exterior = modulus > 1.0 + tol::boundary_band;
        if (boundary || (domain == Domain::disc && interior) ||
            (domain == Domain::exterior && exterior)) {
            cert.offending_roots.push_back({p.location, OffendingRoot::Kind::pole, false});
        }
    }
    if (domain == Domain::disc && r.pole_order_at_origin() > 0) {
        cert.offending_roots.push_back({Complex(0.0, 0.0), OffendingRoot::Kind::pole, false});
    }
    if (domain == Domain::exterior && r.pole_order_at_infinity() > 0) {
        cert.offending_roots.push_back({Complex(0.0, 0.0), OffendingRoot::Kind::pole, true});
    }

    double deviation = 0.0;
    for (int k = 0; k < grid_size; ++k) {
        const Complex value = r(unit_circle_point(k, grid_size));
        deviation = std::max(deviation, std::abs(std::abs(value) - 1.0));
    }
    cert.max_modulus_deviation = deviation;
    cert.verdict = cert.offending_roots.empty() && deviation <= modulus_tolerance;
    return cert;
}

double FactorizedFunction::reconstruction_error() const {
    return coefficient_distance(inner.as_rational() * outer, original);
}

FactorizedFunction factor_rational(const RationalFunction& psi) {
    if (psi.is_zero()) {
        throw InvalidInputError("factor_rational: psi must not be identically zero");
    }
    if (psi.pole_order_at_origin() > 0) {
        throw NotHardyError("factor_rational: psi has a pole at the origin");
    }
    for (const Root& p : psi.poles()) {
        if (std::abs(p.location) <= 1.0 + tol::boundary_band) {
            std::ostringstream msg;
            msg << "factor_rational: pole at (" << p.location.real() << ", "
                << p.location.imag() << ") lies in the closed unit disc";
            throw NotHardyError(msg.str());
        }
    }

    std::vector<Complex> inner_zeros;
    std::vector<Complex> boundary_zeros;
    for (const Root& z : psi.zeros()) {
        if (in_boundary_band(z.location)) {
            boundary_zeros.insert(boundary_zeros.end(),
                                  static_cast<size_t>(z.multiplicity), z.location);
        } else if (std::abs(z.location) < 1.0) {
            inner_zeros.insert(inner_zeros.end(), static_cast<size_t>(z.multiplicity),
                               z.location);
        }
    }

    const BlaschkeProduct unnormalized(inner_zeros, psi.monomial_shift(),
                                       Complex(1.0, 0.0));
    const RationalFunction raw_outer = psi / unnormalized.as_rational();
    const Complex at_origin = raw_outer(Complex(0.0, 0.0));
    if (!(std::abs(at_origin) > 0.0) || !std::isfinite(std::abs(at_origin))) {
        throw InternalConsistencyError(
            "factor_rational: candidate outer part is singular at the origin");
    }
    const Complex phase = at_origin / std::abs(at_origin);

    FactorizedFunction result;
    result.inner = BlaschkeProduct(std::move(inner_zeros), psi.monomial_shift(), phase);
    result.outer = raw_outer * (Complex(1.0, 0.0) / phase);
    result.original = psi;
    result.boundary_zeros = std::move(boundary_zeros);

    if (result.reconstruction_error() > 1e-9) {
        throw InternalConsistencyError(
            "factor_rational: inner * outer does not reproduce psi within 1e-9");
    }
    return result;
}

} // namespace zetascat
