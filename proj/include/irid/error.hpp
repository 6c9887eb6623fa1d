#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace irid {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user input. The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

class ParamError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ConfigError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SingularInput : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegreeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InsufficientData : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class GridMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DenominatorZero : public Error {
public:
    using Error::Error;
};

class EvaluationError : public Error {
public:
    using Error::Error;
};

class SingularSystem : public Error {
public:
    using Error::Error;
};

class NonFiniteIterate : public Error {
public:
    NonFiniteIterate(std::size_t iteration, const std::string& what)
        : Error(what), iteration_(iteration) {}

    std::size_t iteration() const noexcept { return iteration_; }

private:
    std::size_t iteration_;
};

class PoleAtMinusOne : public Error {
public:
    using Error::Error;
};

class ZeroMagnitude : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

enum class Stage { Nilt, Fit, Conversion };

std::string_view stage_name(Stage stage) noexcept;

/// A computation failure inside one pipeline stage. Validation failures are
/// never wrapped, so they keep their own type.
class StageError : public Error {
public:
    StageError(Stage stage, const std::string& what);

    Stage stage() const noexcept { return stage_; }

private:
    Stage stage_;
};

}  // namespace irid
