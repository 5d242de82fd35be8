#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wtop {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or axiom-violating input. CLI maps these to exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

/// An enumeration or saturation outgrew its configured cap. Exit code 1.
struct SizeLimitExceeded : Error {
    using Error::Error;
};

struct ReflexivityViolation : ValidationError {
    std::size_t index;
    explicit ReflexivityViolation(std::size_t i)
        : ValidationError("reflexivity violated: d[" + std::to_string(i) + "][" +
                          std::to_string(i) + "] != 0"),
          index(i) {}
};

struct TriangleViolation : ValidationError {
    std::size_t i, j, k;
    TriangleViolation(std::size_t i_, std::size_t j_, std::size_t k_)
        : ValidationError("triangle inequality violated at (" + std::to_string(i_) + ", " +
                          std::to_string(j_) + ", " + std::to_string(k_) + ")"),
          i(i_), j(j_), k(k_) {}
};

struct UnknownLabel : ValidationError {
    std::string label;
    explicit UnknownLabel(std::string l)
        : ValidationError("unknown point label: " + l), label(std::move(l)) {}
};

struct UnknownObject : ValidationError {
    std::string object;
    explicit UnknownObject(std::string o)
        : ValidationError("unknown object: " + o), object(std::move(o)) {}
};

struct EndpointMismatch : ValidationError {
    using ValidationError::ValidationError;
};

struct NotACategory : ValidationError {
    using ValidationError::ValidationError;
};

struct WeightAxiomViolation : ValidationError {
    using ValidationError::ValidationError;
};

struct NoRetractFound : Error {
    using Error::Error;
};

struct IncompatibleField : ValidationError {
    using ValidationError::ValidationError;
};

struct NotUnimodular : ValidationError {
    using ValidationError::ValidationError;
};

struct EdgeOffSpace : ValidationError {
    using ValidationError::ValidationError;
};

struct CoverViolation : ValidationError {
    using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

}  // namespace wtop
