#pragma once

#include <stdexcept>
#include <string>

namespace cubekit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unsuitable input (CLI exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap was hit (CLI exit code 3).
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Always a bug (CLI exit code 4).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class DomainTooLarge : public CapExceeded {
public:
    using CapExceeded::CapExceeded;
};

class VertexCapExceeded : public CapExceeded {
public:
    using CapExceeded::CapExceeded;
};

class SizeTooLarge : public CapExceeded {
public:
    using CapExceeded::CapExceeded;
};

class MemberNotInFamily : public InputError {
public:
    using InputError::InputError;
};

class NotEssential : public InputError {
public:
    using InputError::InputError;
};

class EmptyVertexSet : public InputError {
public:
    using InputError::InputError;
};

class EmptyDomainDual : public InputError {
public:
    using InputError::InputError;
};

class NoEssentialElements : public InputError {
public:
    using InputError::InputError;
};

class LoopsNotSupported : public InputError {
public:
    using InputError::InputError;
};

class DuplicateMember : public InputError {
public:
    using InputError::InputError;
};

class UnknownElement : public InputError {
public:
    using InputError::InputError;
};

/// Structural problem in an input document; `field` locates it (e.g. "family[2][0]").
class ParseError : public InputError {
public:
    ParseError(std::string field, const std::string& what)
        : InputError(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

    [[nodiscard]] const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Throws InvariantViolation with `message` when `condition` is false.
inline void ensure(bool condition, const std::string& message) {
    if (!condition) {
        throw InvariantViolation(message);
    }
}

}  // namespace cubekit
