#include "zetascat/laurent.hpp"

#include <cmath>
#include <sstream>

#include "zetascat/errors.hpp"

namespace zetascat {

namespace {

/// Quotient and remainder of polynomial long division a / b.
std::pair<ComplexPolynomial, ComplexPolynomial> divide(const ComplexPolynomial& a,
                                                       const ComplexPolynomial& b) {
    std::vector<Complex> rem = a.coeffs();
    const auto& div = b.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {ComplexPolynomial::zero(), a};
    std::vector<Complex> quot(static_cast<size_t>(a.degree() - db) + 1, Complex(0.0, 0.0));
    for (int k = a.degree(); k >= db; --k) {
        const Complex factor = rem[static_cast<size_t>(k)] / div.back();
        quot[static_cast<size_t>(k - db)] = factor;
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<size_t>(k - db + j)] -= factor * div[static_cast<size_t>(j)];
        }
    }
    return {ComplexPolynomial(std::move(quot)),
            ComplexPolynomial(std::move(rem)).trimmed(0.0)};
}

/// First `count` Taylor coefficients of p around the point `at`, via repeated
/// synthetic division by (z - at).
std::vector<Complex> taylor_at(const ComplexPolynomial& p, Complex at, int count) {
    std::vector<Complex> work = p.coeffs();
    if (work.empty()) work.push_back({0.0, 0.0});
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) {
        Complex carry(0.0, 0.0);
        for (size_t j = work.size(); j-- > 0;) {
            carry = work[j] + carry * at;
            work[j] = carry;
        }
        out.push_back(work.front());
        work.erase(work.begin());
        if (work.empty()) work.push_back({0.0, 0.0});
    }
    return out;
}

/// Series quotient num/den mod w^count (den[0] != 0).
std::vector<Complex> series_divide(const std::vector<Complex>& num,
                                   const std::vector<Complex>& den, int count) {
    std::vector<Complex> out(static_cast<size_t>(count), Complex(0.0, 0.0));
    for (int k = 0; k < count; ++k) {
        Complex acc = num[static_cast<size_t>(k)];
        for (int j = 1; j <= k; ++j) {
            acc -= den[static_cast<size_t>(j)] * out[static_cast<size_t>(k - j)];
        }
        out[static_cast<size_t>(k)] = acc / den[0];
    }
    return out;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double v = 1.0;
    for (int i = 1; i <= k; ++i) {
        v = v * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return v;
}

} // namespace

std::vector<Complex> laurent_coefficients(const RationalFunction& r, int m_min,
                                          int m_max) {
    if (m_min > m_max) {
        throw InvalidInputError("laurent_coefficients: empty index range");
    }
    std::vector<Complex> out(static_cast<size_t>(m_max - m_min) + 1, Complex(0.0, 0.0));
    if (r.is_zero()) return out;

    for (const Root& pole : r.poles()) {
        if (std::abs(std::abs(pole.location) - 1.0) <= tol::circle_pole_guard) {
            std::ostringstream msg;
            msg << "laurent_coefficients: pole at (" << pole.location.real() << ", "
                << pole.location.imag() << ") lies on the unit circle";
            throw PoleOnBoundaryError(msg.str(), pole.location);
        }
    }

    const int shift = r.monomial_shift();
    auto add = [&](int m, Complex value) {
        if (m >= m_min && m <= m_max) out[static_cast<size_t>(m - m_min)] += value;
    };

    // Polynomial part (nonnegative powers before the shift).
    auto [poly_part, remainder] = divide(r.numerator(), r.denominator());
    for (int k = 0; k <= poly_part.degree(); ++k) {
        add(k + shift, poly_part.coeff(k));
    }
    if (remainder.is_zero()) return out;

    // Partial fractions of remainder / denominator over each pole.
    const Complex lead = r.denominator().leading();
    for (const Root& pole : r.poles()) {
        const int mult = pole.multiplicity;
        // Cofactor D / (z - p)^mult reconstructed from the other poles.
        std::vector<Complex> others;
        for (const Root& q : r.poles()) {
            if (&q == &pole) continue;
            others.insert(others.end(), static_cast<size_t>(q.multiplicity), q.location);
        }
        const ComplexPolynomial cofactor = ComplexPolynomial::from_roots(others, lead);

        const std::vector<Complex> num_series = taylor_at(remainder, pole.location, mult);
        const std::vector<Complex> den_series = taylor_at(cofactor, pole.location, mult);
        const std::vector<Complex> series = series_divide(num_series, den_series, mult);
        // remainder/D = sum_j c_j / (z - p)^j with c_j = series[mult - j].

        const Complex p = pole.location;
        const bool inside = std::abs(p) < 1.0;
        for (int j = 1; j <= mult; ++j) {
            const Complex cj = series[static_cast<size_t>(mult - j)];
            if (cj == Complex(0.0, 0.0)) continue;
            if (inside) {
                // 1/(z-p)^j = sum_{m <= -j} C(-m-1, j-1) p^{-m-j} z^m
                for (int m = m_min - shift; m <= -j; ++m) {
                    const Complex term =
                        cj * binomial(-m - 1, j - 1) * std::pow(p, -m - j);
                    add(m + shift, term);
                }
            } else {
                // 1/(z-p)^j = sum_{m >= 0} (-1)^j C(m+j-1, j-1) p^{-m-j} z^m
                const double sign = (j % 2 == 0) ? 1.0 : -1.0;
                for (int m = std::max(0, m_min - shift); m <= m_max - shift; ++m) {
                    const Complex term =
                        cj * sign * binomial(m + j - 1, j - 1) * std::pow(p, -m - j);
                    add(m + shift, term);
                }
            }
        }
    }
    return out;
}

} // namespace zetascat
