#include "zetascat/blaschke.hpp"

#include <cmath>

#include "zetascat/errors.hpp"
#include "zetascat/tolerances.hpp"

namespace zetascat {

BlaschkeProduct::BlaschkeProduct(std::vector<Complex> zeros, int monomial_power,
                                 Complex unimodular_constant)
    : zeros_(std::move(zeros)),
      monomial_power_(monomial_power),
      constant_(unimodular_constant) {
    if (monomial_power_ < 0) {
        throw InvalidInputError("BlaschkeProduct: monomial power must be nonnegative");
    }
    if (std::abs(std::abs(constant_) - 1.0) > 1e-12) {
        throw InvalidInputError("BlaschkeProduct: constant must have modulus 1");
    }
    for (Complex a : zeros_) {
        if (std::abs(a) > 1.0 - tol::boundary_band) {
            throw InvalidInputError(
                "BlaschkeProduct: zeros must lie strictly inside the unit disc");
        }
    }
}

Complex BlaschkeProduct::operator()(Complex z) const {
    Complex value = constant_ * std::pow(z, monomial_power_);
    for (Complex a : zeros_) {
        value *= (z - a) / (Complex(1.0, 0.0) - std::conj(a) * z);
    }
    return value;
}

RationalFunction BlaschkeProduct::as_rational() const {
    ComplexPolynomial num({constant_});
    ComplexPolynomial den = ComplexPolynomial::one();
    for (Complex a : zeros_) {
        num = num * ComplexPolynomial({-a, Complex(1.0, 0.0)});
        den = den * ComplexPolynomial({Complex(1.0, 0.0), -std::conj(a)});
    }
    return RationalFunction(std::move(num), std::move(den), monomial_power_);
}

} // namespace zetascat
