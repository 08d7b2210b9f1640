#pragma once

#include <stdexcept>
#include <string>

namespace dw {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data violates a documented invariant. `field()` carries the path of
/// the offending value (e.g. "singularities[0].branches[1].x") when known.
class ValidationError : public Error {
public:
    ValidationError(std::string invariant, std::string message, std::string field = {})
        : Error(compose(invariant, message, field)),
          invariant_(std::move(invariant)),
          field_(std::move(field)) {}

    const std::string& invariant() const noexcept { return invariant_; }
    const std::string& field() const noexcept { return field_; }

    /// Copy of this error with `prefix` prepended to the field path.
    ValidationError at(const std::string& prefix) const;

private:
    static std::string compose(const std::string& invariant, const std::string& message,
                               const std::string& field);

    std::string invariant_;
    std::string field_;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class DegreeOutOfRange : public Error {
public:
    using Error::Error;
};

/// A truncation-driven computation did not stabilize before its cap.
class NonStabilization : public Error {
public:
    NonStabilization(std::string message, int last_truncation)
        : Error(std::move(message)), last_truncation_(last_truncation) {}
    int last_truncation() const noexcept { return last_truncation_; }

private:
    int last_truncation_;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace dw
