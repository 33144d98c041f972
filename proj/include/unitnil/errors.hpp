#ifndef UNITNIL_ERRORS_HPP
#define UNITNIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unitnil {

// Root of the library's exception hierarchy.  Everything thrown on purpose
// derives from Error; anything else escaping the library is a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- usage errors: the caller handed us something malformed -----------------

class MixedFieldsError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class NotSquareError : public Error {
public:
    using Error::Error;
};

class NotPrimeError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    using Error::Error;
};

class ZeroPolynomialError : public Error {
public:
    using Error::Error;
};

class NotMonicError : public Error {
public:
    using Error::Error;
};

class DegreeZeroError : public Error {
public:
    using Error::Error;
};

class NotAPermutationError : public Error {
public:
    using Error::Error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

// --- construction-specific errors -------------------------------------------

// A gadget or complement was requested with index parameters that violate the
// constraints (pivot < start, start + k - 2 <= n, k >= 2, ...).
class IndexConstraintError : public Error {
public:
    using Error::Error;
};

// A complement was asked to absorb more zero blocks than its host can carry.
class CapacityExceededError : public Error {
public:
    using Error::Error;
};

// No assignment of zero blocks to hosts exists (raised by the distribution
// step; decompose() itself reports infeasibility via its return value).
class DistributionImpossibleError : public Error {
public:
    using Error::Error;
};

// --- oracle errors ----------------------------------------------------------

class BudgetExceededError : public Error {
public:
    using Error::Error;
};

class RationalsUnsupportedError : public Error {
public:
    using Error::Error;
};

// --- i/o errors -------------------------------------------------------------

class ParseError : public Error {
public:
    using Error::Error;
};

class EntryOutOfFieldError : public ParseError {
public:
    using ParseError::ParseError;
};

// --- internal consistency ---------------------------------------------------

// Thrown when a mandatory internal cross-check fails.  This always indicates
// a bug in the library, never bad input.
class InternalVerificationError : public Error {
public:
    using Error::Error;
};

}  // namespace unitnil

#endif  // UNITNIL_ERRORS_HPP
