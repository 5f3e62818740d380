#ifndef ZETASCAT_RATIONAL_FUNCTION_HPP
#define ZETASCAT_RATIONAL_FUNCTION_HPP

#include <optional>
#include <vector>

#include "zetascat/complex_polynomial.hpp"
#include "zetascat/roots.hpp"
#include "zetascat/tolerances.hpp"

namespace zetascat {

/// z^shift * numerator(z) / denominator(z), stored in reduced form: common
/// roots of numerator and denominator (within the reduction tolerance) are
/// cancelled at construction and the zero/pole lists are kept alongside the
/// coefficients. The monomial shift makes the type closed under conjugate
/// reflection z -> 1/z.
class RationalFunction {
public:
    /// The zero function (numerator 0 / denominator 1).
    RationalFunction();

    RationalFunction(ComplexPolynomial numerator, ComplexPolynomial denominator,
                     int monomial_shift = 0,
                     double reduce_tolerance = tol::rational_reduce);

    static RationalFunction constant(Complex value);
    static RationalFunction polynomial(ComplexPolynomial p);
    static RationalFunction monomial(int power);

    const ComplexPolynomial& numerator() const { return numerator_; }
    const ComplexPolynomial& denominator() const { return denominator_; }
    int monomial_shift() const { return monomial_shift_; }
    bool is_zero() const { return numerator_.is_zero(); }

    /// Finite zeros/poles of the reduced form; the z^shift factor and
    /// behaviour at infinity are not included.
    const std::vector<Root>& zeros() const { return zeros_; }
    const std::vector<Root>& poles() const { return poles_; }

    /// Order of the pole at z = 0 (0 when analytic there); accounts for the
    /// monomial shift.
    int pole_order_at_origin() const;
    /// Order of the pole at z = infinity (0 when analytic there).
    int pole_order_at_infinity() const;

    Complex operator()(Complex z) const;

    RationalFunction operator+(const RationalFunction& other) const;
    RationalFunction operator*(const RationalFunction& other) const;
    RationalFunction operator*(Complex scale) const;
    RationalFunction reciprocal() const;
    RationalFunction operator/(const RationalFunction& other) const;

    /// r*(z): coefficients conjugated and z -> 1/z. On |z| = 1 this equals
    /// conj(r(z)).
    RationalFunction conjugate_reflection() const;

    /// Smallest pole modulus strictly above 1 (for Taylor tail bounds);
    /// nullopt when there is no finite pole outside the closed disc.
    std::optional<double> smallest_exterior_pole_modulus() const;

private:
    void reduce(double tolerance);

    ComplexPolynomial numerator_;
    ComplexPolynomial denominator_;
    int monomial_shift_ = 0;
    std::vector<Root> zeros_;
    std::vector<Root> poles_;
};

inline RationalFunction operator*(Complex scale, const RationalFunction& r) {
    return r * scale;
}

/// Samples r(e^{i theta_k}) at theta_k = 2 pi k / grid_size. Throws
/// PoleOnBoundaryError when a pole sits within the guard band of the circle.
std::vector<Complex> rational_eval_circle(const RationalFunction& r, int grid_size);

/// e^{2 pi i k / n} via the angle, so sampling is deterministic and exactly
/// conjugate-symmetric.
Complex unit_circle_point(long long k, long long n);

/// Max over cross-multiplied coefficients of |r1 - r2|, normalized by the
/// largest coefficient magnitude. Zero shift difference is folded in.
double coefficient_distance(const RationalFunction& r1, const RationalFunction& r2);

} // namespace zetascat

#endif
