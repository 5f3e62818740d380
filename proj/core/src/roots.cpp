#include "zetascat/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "zetascat/errors.hpp"

namespace zetascat {

namespace {

using LComplex = std::complex<long double>;

constexpr long double kLongEps = std::numeric_limits<long double>::epsilon();

std::vector<LComplex> to_long(const std::vector<Complex>& c) {
    std::vector<LComplex> out(c.size());
    std::transform(c.begin(), c.end(), out.begin(), [](Complex v) {
        return LComplex(v.real(), v.imag());
    });
    return out;
}

LComplex eval(const std::vector<LComplex>& coeffs, LComplex z) {
    LComplex acc(0.0L, 0.0L);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<LComplex> derivative(const std::vector<LComplex>& coeffs) {
    if (coeffs.size() < 2) return {};
    std::vector<LComplex> d(coeffs.size() - 1);
    for (size_t k = 1; k < coeffs.size(); ++k) {
        d[k - 1] = coeffs[k] * static_cast<long double>(k);
    }
    return d;
}

long double eval_magnitude_scale(const std::vector<LComplex>& coeffs, LComplex z) {
    const long double r = std::max<long double>(1.0L, std::abs(z));
    long double scale = 0.0L;
    long double rk = 1.0L;
    for (const auto& c : coeffs) {
        scale += std::abs(c) * rk;
        rk *= r;
    }
    return scale;
}

/// One pass of Aberth-Ehrlich. Returns the largest applied correction
/// relative to (1 + |z_i|).
long double aberth_sweep(const std::vector<LComplex>& p,
                         const std::vector<LComplex>& dp,
                         std::vector<LComplex>& z,
                         std::vector<bool>& settled) {
    const size_t n = z.size();
    long double worst = 0.0L;
    for (size_t i = 0; i < n; ++i) {
        if (settled[i]) continue;
        const LComplex pi = eval(p, z[i]);
        // Backward-error floor: the value is indistinguishable from zero.
        if (std::abs(pi) <= 8.0L * kLongEps * eval_magnitude_scale(p, z[i])) {
            settled[i] = true;
            continue;
        }
        const LComplex dpi = eval(dp, z[i]);
        LComplex newton = (dpi == LComplex(0.0L, 0.0L)) ? LComplex(0.1L, 0.1L)
                                                        : pi / dpi;
        LComplex repulsion(0.0L, 0.0L);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const LComplex diff = z[i] - z[j];
            if (std::abs(diff) > 0.0L) repulsion += LComplex(1.0L, 0.0L) / diff;
        }
        const LComplex denom = LComplex(1.0L, 0.0L) - newton * repulsion;
        LComplex w = (std::abs(denom) < 1e-30L) ? newton : newton / denom;
        z[i] -= w;
        worst = std::max(worst, std::abs(w) / (1.0L + std::abs(z[i])));
    }
    return worst;
}

std::vector<LComplex> initial_guesses(const std::vector<LComplex>& p) {
    const size_t n = p.size() - 1;
    // Cauchy-style radius; exact value hardly matters for these degrees.
    long double radius = 0.0L;
    const long double lead = std::abs(p.back());
    for (size_t k = 0; k < n; ++k) {
        const long double c = std::abs(p[k]) / lead;
        if (c > 0.0L) {
            radius = std::max(radius, std::pow(c, 1.0L / static_cast<long double>(n - k)));
        }
    }
    radius = std::clamp(radius, 0.5L, 8.0L);
    std::vector<LComplex> z(n);
    for (size_t j = 0; j < n; ++j) {
        const long double angle =
            2.0L * 3.14159265358979323846L * (static_cast<long double>(j) + 0.3L) /
                static_cast<long double>(n) +
            0.7L;
        z[j] = radius * LComplex(std::cos(angle), std::sin(angle));
    }
    return z;
}

std::vector<LComplex> companion_eigenvalues(const std::vector<Complex>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    const Complex lead = coeffs.back();
    for (int i = 0; i < n; ++i) {
        companion(i, n - 1) = -coeffs[static_cast<size_t>(i)] / lead;
        if (i + 1 < n) companion(i + 1, i) = 1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<LComplex> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Complex v = solver.eigenvalues()(i);
        z[static_cast<size_t>(i)] = LComplex(v.real(), v.imag());
    }
    return z;
}

/// Single-linkage clusters. Two approximations join when they sit within the
/// configured radius, or when their Smith-style inclusion discs of radius
/// ~n|p/p'| overlap (how a noise constellation around a multiple root looks).
std::vector<std::vector<size_t>> cluster(const std::vector<LComplex>& z,
                                         const std::vector<long double>& inclusion,
                                         double radius) {
    const size_t n = z.size();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&parent](size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const long double dist = std::abs(z[i] - z[j]);
            if (dist <= static_cast<long double>(radius) ||
                dist <= inclusion[i] + inclusion[j]) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<std::vector<size_t>> groups;
    std::vector<long long> group_of(n, -1);
    for (size_t i = 0; i < n; ++i) {
        const size_t root = find(i);
        if (group_of[root] < 0) {
            group_of[root] = static_cast<long long>(groups.size());
            groups.emplace_back();
        }
        groups[static_cast<size_t>(group_of[root])].push_back(i);
    }
    return groups;
}

/// Newton refinement on the (m-1)-th derivative, where a multiplicity-m
/// root is simple.
LComplex polish(const std::vector<LComplex>& p, LComplex z0, int multiplicity) {
    std::vector<LComplex> target = p;
    for (int k = 1; k < multiplicity; ++k) target = derivative(target);
    const std::vector<LComplex> dtarget = derivative(target);
    LComplex z = z0;
    for (int iter = 0; iter < 40; ++iter) {
        const LComplex fz = eval(target, z);
        const LComplex dfz = eval(dtarget, z);
        if (std::abs(dfz) == 0.0L) break;
        const LComplex step = fz / dfz;
        z -= step;
        if (std::abs(step) <= 1e-18L * (1.0L + std::abs(z))) break;
    }
    return z;
}

} // namespace

int RootSet::total_multiplicity() const {
    int total = 0;
    for (const Root& r : roots) total += r.multiplicity;
    return total;
}

std::vector<Complex> RootSet::flattened() const {
    std::vector<Complex> out;
    for (const Root& r : roots) {
        out.insert(out.end(), static_cast<size_t>(r.multiplicity), r.location);
    }
    return out;
}

RootSet find_roots(const ComplexPolynomial& p, const RootOptions& options) {
    if (p.is_zero()) {
        throw InvalidInputError("find_roots: the zero polynomial has no well-defined roots");
    }
    if (p.degree() < 1) {
        throw InvalidInputError("find_roots: degree must be at least 1");
    }

    // Exact zeros at the origin come off first.
    std::vector<Complex> work = p.coeffs();
    int origin_multiplicity = 0;
    while (work.front() == Complex(0.0, 0.0)) {
        work.erase(work.begin());
        ++origin_multiplicity;
    }

    RootSet result;
    if (origin_multiplicity > 0) {
        result.roots.push_back({Complex(0.0, 0.0), origin_multiplicity});
    }
    if (work.size() < 2) {
        return result;
    }

    const std::vector<LComplex> pl = to_long(work);
    const std::vector<LComplex> dpl = derivative(pl);
    const size_t n = pl.size() - 1;

    std::vector<LComplex> z;
    if (n == 1) {
        z = {-pl[0] / pl[1]};
    } else {
        z = initial_guesses(pl);
        std::vector<bool> settled(n, false);
        bool converged = false;
        for (int iter = 0; iter < options.max_iterations; ++iter) {
            const long double worst = aberth_sweep(pl, dpl, z, settled);
            if (worst <= static_cast<long double>(options.iteration_tolerance)) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            z = companion_eigenvalues(work);
            // A couple of Aberth sweeps to polish the eigenvalues.
            std::vector<bool> fresh(n, false);
            for (int iter = 0; iter < 20; ++iter) {
                if (aberth_sweep(pl, dpl, z, fresh) <=
                    static_cast<long double>(options.iteration_tolerance)) {
                    break;
                }
            }
        }
    }

    std::vector<long double> inclusion(z.size(), 0.0L);
    for (size_t i = 0; i < z.size(); ++i) {
        const LComplex dpi = eval(dpl, z[i]);
        if (std::abs(dpi) > 0.0L) {
            inclusion[i] = 4.0L * static_cast<long double>(z.size()) *
                           std::abs(eval(pl, z[i]) / dpi);
        } else {
            inclusion[i] = static_cast<long double>(options.cluster_radius);
        }
    }

    for (const auto& group : cluster(z, inclusion, options.cluster_radius)) {
        LComplex center(0.0L, 0.0L);
        for (size_t idx : group) center += z[idx];
        center /= static_cast<long double>(group.size());
        const int multiplicity = static_cast<int>(group.size());
        if (multiplicity > 1) {
            center = polish(pl, center, multiplicity);
        }
        result.roots.push_back(
            {Complex(static_cast<double>(center.real()), static_cast<double>(center.imag())),
             multiplicity});
    }

    double residual = 0.0;
    double scale = 1.0;
    for (const Root& r : result.roots) {
        residual = std::max(residual, std::abs(p(r.location)));
        scale = std::max(scale, p.evaluation_scale(r.location));
    }
    result.residual = residual;
    if (residual > options.residual_tolerance * scale) {
        std::ostringstream msg;
        msg << "find_roots: residual " << residual << " exceeds tolerance "
            << options.residual_tolerance * scale << " (best iterate kept";
        for (const Root& r : result.roots) {
            msg << " " << r.location.real() << (r.location.imag() < 0 ? "-" : "+")
                << std::abs(r.location.imag()) << "i x" << r.multiplicity;
        }
        msg << ")";
        throw NumericalFailureError(msg.str());
    }
    return result;
}

ComplexPolynomial polynomial_from_rootset(const RootSet& roots, Complex leading) {
    const std::vector<Complex> flat = roots.flattened();
    return ComplexPolynomial::from_roots(flat, leading);
}

} // namespace zetascat
