#ifndef ZETASCAT_BLASCHKE_HPP
#define ZETASCAT_BLASCHKE_HPP

#include <vector>

#include "zetascat/rational_function.hpp"

namespace zetascat {

/// Finite Blaschke product
///   B(z) = c * z^k * prod_i (z - a_i) / (1 - conj(a_i) z)
/// with every a_i strictly inside the unit disc, k >= 0 and |c| = 1. The
/// inner part of a rational Hardy-class function always has this shape.
class BlaschkeProduct {
public:
    BlaschkeProduct() = default;
    BlaschkeProduct(std::vector<Complex> zeros, int monomial_power,
                    Complex unimodular_constant);

    static BlaschkeProduct identity() { return {}; }

    const std::vector<Complex>& zeros() const { return zeros_; }
    int monomial_power() const { return monomial_power_; }
    Complex unimodular_constant() const { return constant_; }

    bool is_trivial() const { return zeros_.empty() && monomial_power_ == 0; }
    /// Trivial up to the z^k factor: no disc automorphism factors at all.
    bool has_no_disc_zeros() const { return zeros_.empty(); }

    Complex operator()(Complex z) const;
    RationalFunction as_rational() const;

private:
    std::vector<Complex> zeros_;
    int monomial_power_ = 0;
    Complex constant_{1.0, 0.0};
};

} // namespace zetascat

#endif
