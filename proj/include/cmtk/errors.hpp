#pragma once

#include <stdexcept>
#include <string>

namespace cmtk {

// Invalid or degenerate user input (bad degree file, odd degree sum,
// zero-edge sequence, out-of-range argument).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation.
class DomainError : public InputError {
public:
    explicit DomainError(const std::string& what) : InputError(what) {}
};

// An exhaustive computation would exceed the configured resource cap.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// A cross-check between two independent computations failed.  Always a bug.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cmtk
