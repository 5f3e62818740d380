#include "zetascat/rational_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "zetascat/errors.hpp"

namespace zetascat {

namespace {

/// Synthetic division of p by (z - root); the remainder is dropped.
ComplexPolynomial deflate(const ComplexPolynomial& p, Complex root) {
    const auto& c = p.coeffs();
    if (c.size() < 2) return ComplexPolynomial::one();
    std::vector<Complex> q(c.size() - 1);
    Complex carry = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = c[k] + carry * root;
    }
    return ComplexPolynomial(std::move(q));
}

int strip_origin_zeros(ComplexPolynomial& p) {
    int count = 0;
    std::vector<Complex> c = p.coeffs();
    while (c.size() > 1 && c.front() == Complex(0.0, 0.0)) {
        c.erase(c.begin());
        ++count;
    }
    p = ComplexPolynomial(std::move(c));
    return count;
}

std::vector<Root> roots_of(const ComplexPolynomial& p) {
    if (p.degree() < 1) return {};
    return find_roots(p).roots;
}

} // namespace

RationalFunction::RationalFunction()
    : numerator_(ComplexPolynomial::zero()), denominator_(ComplexPolynomial::one()) {}

RationalFunction::RationalFunction(ComplexPolynomial numerator,
                                   ComplexPolynomial denominator, int monomial_shift,
                                   double reduce_tolerance)
    : numerator_(std::move(numerator)),
      denominator_(std::move(denominator)),
      monomial_shift_(monomial_shift) {
    if (denominator_.is_zero()) {
        throw InvalidInputError("RationalFunction: denominator must not be zero");
    }
    if (numerator_.is_zero()) {
        denominator_ = ComplexPolynomial::one();
        monomial_shift_ = 0;
        return;
    }
    monomial_shift_ += strip_origin_zeros(numerator_);
    monomial_shift_ -= strip_origin_zeros(denominator_);
    reduce(reduce_tolerance);
}

RationalFunction RationalFunction::constant(Complex value) {
    return RationalFunction(ComplexPolynomial({value}), ComplexPolynomial::one());
}

RationalFunction RationalFunction::polynomial(ComplexPolynomial p) {
    return RationalFunction(std::move(p), ComplexPolynomial::one());
}

RationalFunction RationalFunction::monomial(int power) {
    return RationalFunction(ComplexPolynomial::one(), ComplexPolynomial::one(), power);
}

void RationalFunction::reduce(double tolerance) {
    std::vector<Root> num_roots = roots_of(numerator_);
    std::vector<Root> den_roots = roots_of(denominator_);

    bool cancelled = false;
    for (Root& pole : den_roots) {
        for (Root& zero : num_roots) {
            if (pole.multiplicity == 0 || zero.multiplicity == 0) continue;
            if (std::abs(pole.location - zero.location) <= tolerance) {
                const int k = std::min(pole.multiplicity, zero.multiplicity);
                for (int i = 0; i < k; ++i) {
                    numerator_ = deflate(numerator_, zero.location);
                    denominator_ = deflate(denominator_, pole.location);
                }
                pole.multiplicity -= k;
                zero.multiplicity -= k;
                cancelled = true;
            }
        }
    }
    if (cancelled) {
        std::erase_if(num_roots, [](const Root& r) { return r.multiplicity == 0; });
        std::erase_if(den_roots, [](const Root& r) { return r.multiplicity == 0; });
    }
    zeros_ = std::move(num_roots);
    poles_ = std::move(den_roots);
}

int RationalFunction::pole_order_at_origin() const {
    return std::max(0, -monomial_shift_);
}

int RationalFunction::pole_order_at_infinity() const {
    if (is_zero()) return 0;
    return std::max(0, monomial_shift_ + numerator_.degree() - denominator_.degree());
}

Complex RationalFunction::operator()(Complex z) const {
    Complex value = numerator_(z) / denominator_(z);
    if (monomial_shift_ != 0) {
        value *= std::pow(z, monomial_shift_);
    }
    return value;
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    const int s = std::min(monomial_shift_, other.monomial_shift_);
    const ComplexPolynomial a =
        numerator_ * ComplexPolynomial::monomial(monomial_shift_ - s) * other.denominator_;
    const ComplexPolynomial b = other.numerator_ *
                                ComplexPolynomial::monomial(other.monomial_shift_ - s) *
                                denominator_;
    return RationalFunction(a + b, denominator_ * other.denominator_, s);
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
    return RationalFunction(numerator_ * other.numerator_,
                            denominator_ * other.denominator_,
                            monomial_shift_ + other.monomial_shift_);
}

RationalFunction RationalFunction::operator*(Complex scale) const {
    if (scale == Complex(0.0, 0.0)) return RationalFunction();
    return RationalFunction(numerator_ * scale, denominator_, monomial_shift_);
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) {
        throw InvalidInputError("RationalFunction: cannot invert the zero function");
    }
    return RationalFunction(denominator_, numerator_, -monomial_shift_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& other) const {
    return *this * other.reciprocal();
}

RationalFunction RationalFunction::conjugate_reflection() const {
    if (is_zero()) return RationalFunction();
    const int dn = numerator_.degree();
    const int dd = denominator_.degree();
    return RationalFunction(numerator_.reversed().conjugate_coefficients(),
                            denominator_.reversed().conjugate_coefficients(),
                            -monomial_shift_ - dn + dd);
}

std::optional<double> RationalFunction::smallest_exterior_pole_modulus() const {
    std::optional<double> best;
    for (const Root& pole : poles_) {
        const double m = std::abs(pole.location);
        if (m > 1.0 + tol::boundary_band && (!best || m < *best)) best = m;
    }
    return best;
}

Complex unit_circle_point(long long k, long long n) {
    const double theta =
        2.0 * std::numbers::pi * (static_cast<double>(k) / static_cast<double>(n));
    return std::polar(1.0, theta);
}

std::vector<Complex> rational_eval_circle(const RationalFunction& r, int grid_size) {
    if (grid_size < 1) {
        throw InvalidInputError("rational_eval_circle: grid_size must be positive");
    }
    for (const Root& pole : r.poles()) {
        if (std::abs(std::abs(pole.location) - 1.0) <= tol::circle_pole_guard) {
            std::ostringstream msg;
            msg << "rational_eval_circle: pole at (" << pole.location.real() << ", "
                << pole.location.imag() << ") lies on the unit circle";
            throw PoleOnBoundaryError(msg.str(), pole.location);
        }
    }
    std::vector<Complex> samples(static_cast<size_t>(grid_size));
    for (int k = 0; k < grid_size; ++k) {
        samples[static_cast<size_t>(k)] = r(unit_circle_point(k, grid_size));
    }
    return samples;
}

double coefficient_distance(const RationalFunction& r1, const RationalFunction& r2) {
    const int s = std::min(r1.monomial_shift(), r2.monomial_shift());
    const ComplexPolynomial a = r1.numerator() *
                                ComplexPolynomial::monomial(r1.monomial_shift() - s) *
                                r2.denominator();
    const ComplexPolynomial b = r2.numerator() *
                                ComplexPolynomial::monomial(r2.monomial_shift() - s) *
                                r1.denominator();
    const double scale = std::max({a.max_coeff_magnitude(), b.max_coeff_magnitude(), 1e-300});
    return (a - b).max_coeff_magnitude() / scale;
}

} // namespace zetascat
