#ifndef ZETASCAT_COMPLEX_POLYNOMIAL_HPP
#define ZETASCAT_COMPLEX_POLYNOMIAL_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace zetascat {

using Complex = std::complex<double>;

/// Dense polynomial over the complex numbers, coefficients stored lowest
/// degree first. The coefficient list never carries trailing exact zeros, so
/// degree() is the index of the last stored coefficient (-1 for the zero
/// polynomial).
class ComplexPolynomial {
public:
    ComplexPolynomial() = default;
    ComplexPolynomial(std::initializer_list<Complex> coeffs);
    explicit ComplexPolynomial(std::vector<Complex> coeffs);

    static ComplexPolynomial zero() { return ComplexPolynomial(); }
    static ComplexPolynomial one() { return ComplexPolynomial({Complex(1.0, 0.0)}); }
    static ComplexPolynomial monomial(int power, Complex scale = {1.0, 0.0});

    /// c * prod (z - root_i); roots listed with multiplicity.
    static ComplexPolynomial from_roots(std::span<const Complex> roots,
                                        Complex leading = {1.0, 0.0});

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Complex coeff(int power) const;
    Complex leading() const;

    /// True when every coefficient has zero imaginary part (within atol).
    bool has_real_coefficients(double atol = 0.0) const;

    /// Horner evaluation, accumulated in extended precision.
    Complex operator()(Complex z) const;
    std::complex<long double> eval_long(std::complex<long double> z) const;

    ComplexPolynomial derivative() const;

    /// Coefficient-wise complex conjugation: p_conj(z) = conj(p(conj z)).
    ComplexPolynomial conjugate_coefficients() const;

    /// Reversed coefficients: returns q with q(z) = z^degree * p(1/z).
    ComplexPolynomial reversed() const;

    /// Drops leading coefficients with |c| <= atol (cleanup after near
    /// cancellation); exact zeros are always stripped on construction.
    ComplexPolynomial trimmed(double atol) const;

    ComplexPolynomial operator-() const;
    ComplexPolynomial operator+(const ComplexPolynomial& other) const;
    ComplexPolynomial operator-(const ComplexPolynomial& other) const;
    ComplexPolynomial operator*(const ComplexPolynomial& other) const;
    ComplexPolynomial operator*(Complex scale) const;

    bool operator==(const ComplexPolynomial& other) const = default;

    /// Max coefficient magnitude (0 for the zero polynomial).
    double max_coeff_magnitude() const;

    /// sum_k |a_k| * max(1,|z|)^k; scale for backward-error tests.
    double evaluation_scale(Complex z) const;

private:
    void normalize();

    std::vector<Complex> coeffs_;
};

inline ComplexPolynomial operator*(Complex scale, const ComplexPolynomial& p) {
    return p * scale;
}

} // namespace zetascat

#endif
