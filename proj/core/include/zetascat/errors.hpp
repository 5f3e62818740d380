#ifndef ZETASCAT_ERRORS_HPP
#define ZETASCAT_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace zetascat {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on user-supplied data was violated.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// An iterative numerical method failed to converge.
class NumericalFailureError : public Error {
public:
    using Error::Error;
};

/// A rational function has a pole on (or too close to) the unit circle.
class PoleOnBoundaryError : public Error {
public:
    PoleOnBoundaryError(const std::string& what, std::complex<double> pole)
        : Error(what), pole_(pole) {}
    std::complex<double> pole() const { return pole_; }

private:
    std::complex<double> pole_;
};

/// The supplied function is not in the rational subclass of the Hardy space.
class NotHardyError : public Error {
public:
    using Error::Error;
};

/// A sampled density has a nonpositive sample; the cepstral path needs f > 0.
class DegenerateDensityError : public Error {
public:
    using Error::Error;
};

/// The log-density integral diverges; no one-sided representation exists.
class NotPurelyInnovatingError : public Error {
public:
    using Error::Error;
};

/// Two independent computation routes disagreed; signals a library bug.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

/// The requested finite field or enumeration exceeds the brute-force bound.
class OutOfRangeError : public Error {
public:
    using Error::Error;
};

/// The curve model kind is not one of the supported forms.
class UnsupportedModelError : public Error {
public:
    using Error::Error;
};

/// Point counts do not come from the zeta function of any curve.
class InconsistentCountsError : public Error {
public:
    using Error::Error;
};

/// The numerator polynomial fails a structural curve requirement.
class InvalidCurveError : public Error {
public:
    using Error::Error;
};

/// A moving-average model is structurally unusable.
class InvalidModelError : public Error {
public:
    using Error::Error;
};

} // namespace zetascat

#endif
