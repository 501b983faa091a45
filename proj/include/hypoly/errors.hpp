#pragma once

#include <stdexcept>
#include <string>

namespace hypoly {

/// Base type for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters (alpha, beta) violate the admissibility constraints of a class,
/// or a scalar argument (l, m, N, ...) is structurally invalid.
class ParameterOutOfRange : public Error {
public:
    using Error::Error;
};

/// A point argument lies outside the domain where the requested quantity
/// is defined (outside the orthogonality interval, sigma <= 0, z <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A degree l was requested at or beyond the square-integrability cutoff.
class CutoffExceeded : public Error {
public:
    using Error::Error;
};

/// The downward coefficient recurrence hit a vanishing divisor.
class DegenerateRecurrence : public Error {
public:
    using Error::Error;
};

/// No independent classical closed form is available for this class.
class OracleUnavailable : public Error {
public:
    using Error::Error;
};

/// An (l, m) index pair violates 0 <= m <= l or a similar index contract.
class IndexError : public Error {
public:
    using Error::Error;
};

/// An operator was applied to a representation at the wrong kappa level.
class RepMismatch : public Error {
public:
    using Error::Error;
};

/// The integral does not converge (divergent tail, or refinement exhausted).
class QuadratureDivergence : public Error {
public:
    using Error::Error;
};

/// The requested operation is not defined for this sigma class.
class UnsupportedClass : public Error {
public:
    using Error::Error;
};

/// A series parameter sits on a pole (e.g. 0F1 with nonpositive integer c).
class PoleError : public Error {
public:
    using Error::Error;
};

/// A truncated expansion cannot represent the state to the required tail bound.
class TruncationInsufficient : public Error {
public:
    using Error::Error;
};

/// A cross-check that must hold by construction failed numerically.
class ToleranceExceeded : public Error {
public:
    using Error::Error;
};

} // namespace hypoly
