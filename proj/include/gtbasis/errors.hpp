#pragma once

#include <stdexcept>
#include <string>

namespace gtb {

/// A denominator vanished where a finite value was required.
class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by the identically zero rational function.
class DivisionByZero : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A highest weight or pattern failed validation.
class InvalidWeight : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Building a representation failed (surviving pole, closure mismatch, ...).
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact linear system turned out to be inconsistent.
class InconsistentSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gtb
