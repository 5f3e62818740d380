#include "zetascat/spectral_density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zetascat/errors.hpp"
#include "zetascat/laurent.hpp"

namespace zetascat {

SpectralDensity SpectralDensity::from_rational(RationalFunction r) {
    if (r.is_zero()) {
        throw InvalidInputError(
            "SpectralDensity: the zero function is not a valid density");
    }
    for (const Root& p : r.poles()) {
        if (std::abs(std::abs(p.location) - 1.0) <= tol::circle_pole_guard) {
            throw PoleOnBoundaryError(
                "SpectralDensity: |r|^2 has a non-integrable pole on the circle",
                p.location);
        }
    }
    SpectralDensity f;
    // gamma_0 = Laurent coefficient 0 of r * r~ on the unit circle's annulus.
    const RationalFunction product = r * r.conjugate_reflection();
    f.total_mass_ = laurent_coefficients(product, 0, 0).front().real();
    f.form_ = std::move(r);
    return f;
}

SpectralDensity SpectralDensity::from_samples(std::vector<double> samples) {
    if (samples.empty()) {
        throw InvalidInputError("SpectralDensity: sample grid must not be empty");
    }
    for (double v : samples) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw InvalidInputError("SpectralDensity: samples must be finite and >= 0");
        }
    }
    const double mass = std::accumulate(samples.begin(), samples.end(), 0.0) /
                        static_cast<double>(samples.size());
    if (!(mass > 0.0)) {
        throw InvalidInputError("SpectralDensity: density must have positive mass");
    }
    SpectralDensity f;
    f.total_mass_ = mass;
    f.form_ = std::move(samples);
    return f;
}

bool SpectralDensity::is_rational() const {
    return std::holds_alternative<RationalFunction>(form_);
}

const RationalFunction& SpectralDensity::rational() const {
    return std::get<RationalFunction>(form_);
}

const std::vector<double>& SpectralDensity::samples() const {
    return std::get<std::vector<double>>(form_);
}

std::vector<double> SpectralDensity::grid_values(int n) const {
    if (n < 1) throw InvalidInputError("SpectralDensity: grid size must be positive");
    if (!is_rational()) {
        if (static_cast<size_t>(n) != samples().size()) {
            throw InvalidInputError(
                "SpectralDensity: sampled densities are fixed to their own grid");
        }
        return samples();
    }
    std::vector<double> values(static_cast<size_t>(n));
    const RationalFunction& r = rational();
    for (int k = 0; k < n; ++k) {
        values[static_cast<size_t>(k)] = std::norm(r(unit_circle_point(k, n)));
    }
    return values;
}

SzegoResult szego_condition(const SpectralDensity& f) {
    if (f.is_rational()) {
        // int log |r|^2 via Jensen's formula: the monomial shift integrates to
        // zero and circle zeros contribute log 1 = 0.
        const RationalFunction& r = f.rational();
        double value = std::log(std::abs(r.numerator().leading())) -
                       std::log(std::abs(r.denominator().leading()));
        for (const Root& z : r.zeros()) {
            value += z.multiplicity * std::max(std::log(std::abs(z.location)), 0.0);
        }
        for (const Root& p : r.poles()) {
            value -= p.multiplicity * std::max(std::log(std::abs(p.location)), 0.0);
        }
        return {true, 2.0 * value};
    }
    const std::vector<double>& samples = f.samples();
    if (std::any_of(samples.begin(), samples.end(), [](double v) { return v <= 0.0; })) {
        return {false, 0.0};
    }
    double mean = 0.0;
    for (double v : samples) mean += std::log(v);
    return {true, mean / static_cast<double>(samples.size())};
}

InnovationVerdict purely_innovating(const SpectralDensity& f) {
    const SzegoResult szego = szego_condition(f);
    if (!szego.finite) {
        return {false, "Szego condition fails: log f is not integrable "
                       "(density vanishes on part of the grid)"};
    }
    return {true, f.is_rational()
                      ? "absolutely continuous rational density with integrable log"
                      : "strictly positive sampled density with integrable log"};
}

} // namespace zetascat
