#include "zetascat/complex_polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace zetascat {

ComplexPolynomial::ComplexPolynomial(std::initializer_list<Complex> coeffs)
    : coeffs_(coeffs) {
    normalize();
}

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
    normalize();
}

void ComplexPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0)) {
        coeffs_.pop_back();
    }
}

ComplexPolynomial ComplexPolynomial::monomial(int power, Complex scale) {
    if (scale == Complex(0.0, 0.0) || power < 0) return zero();
    std::vector<Complex> c(static_cast<size_t>(power) + 1, Complex(0.0, 0.0));
    c.back() = scale;
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const Complex> roots,
                                                Complex leading) {
    ComplexPolynomial p({leading});
    for (Complex r : roots) {
        p = p * ComplexPolynomial({-r, Complex(1.0, 0.0)});
    }
    return p;
}

Complex ComplexPolynomial::coeff(int power) const {
    if (power < 0 || power > degree()) return {0.0, 0.0};
    return coeffs_[static_cast<size_t>(power)];
}

Complex ComplexPolynomial::leading() const {
    return coeffs_.empty() ? Complex(0.0, 0.0) : coeffs_.back();
}

bool ComplexPolynomial::has_real_coefficients(double atol) const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [atol](Complex c) {
        return std::abs(c.imag()) <= atol;
    });
}

Complex ComplexPolynomial::operator()(Complex z) const {
    std::complex<long double> r =
        eval_long({static_cast<long double>(z.real()), static_cast<long double>(z.imag())});
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

std::complex<long double> ComplexPolynomial::eval_long(std::complex<long double> z) const {
    std::complex<long double> acc(0.0L, 0.0L);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + std::complex<long double>(it->real(), it->imag());
    }
    return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
    if (degree() < 1) return zero();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * static_cast<double>(k);
    }
    return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::conjugate_coefficients() const {
    std::vector<Complex> c(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), c.begin(),
                   [](Complex v) { return std::conj(v); });
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::reversed() const {
    std::vector<Complex> c(coeffs_.rbegin(), coeffs_.rend());
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::trimmed(double atol) const {
    std::vector<Complex> c = coeffs_;
    while (!c.empty() && std::abs(c.back()) <= atol) c.pop_back();
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::operator-() const {
    return *this * Complex(-1.0, 0.0);
}

ComplexPolynomial ComplexPolynomial::operator+(const ComplexPolynomial& other) const {
    std::vector<Complex> c(std::max(coeffs_.size(), other.coeffs_.size()),
                           Complex(0.0, 0.0));
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (size_t k = 0; k < other.coeffs_.size(); ++k) c[k] += other.coeffs_[k];
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::operator-(const ComplexPolynomial& other) const {
    return *this + (-other);
}

ComplexPolynomial ComplexPolynomial::operator*(const ComplexPolynomial& other) const {
    if (is_zero() || other.is_zero()) return zero();
    std::vector<Complex> c(coeffs_.size() + other.coeffs_.size() - 1,
                           Complex(0.0, 0.0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < other.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::operator*(Complex scale) const {
    if (scale == Complex(0.0, 0.0)) return zero();
    std::vector<Complex> c(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), c.begin(),
                   [scale](Complex v) { return v * scale; });
    return ComplexPolynomial(std::move(c));
}

double ComplexPolynomial::max_coeff_magnitude() const {
    double m = 0.0;
    for (Complex c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double ComplexPolynomial::evaluation_scale(Complex z) const {
    const double r = std::max(1.0, std::abs(z));
    double scale = 0.0;
    double rk = 1.0;
    for (Complex c : coeffs_) {
        scale += std::abs(c) * rk;
        rk *= r;
    }
    return scale;
}

} // namespace zetascat
