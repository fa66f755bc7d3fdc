#pragma once

#include <stdexcept>
#include <string>

namespace diffcech {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands carry different coefficient-group tags.
class TagError : public Error {
public:
    using Error::Error;
};

/// A function lies outside its declared class, or an action does not preserve it.
class ClassError : public Error {
public:
    using Error::Error;
};

/// Requested cochain degree is not supported by the presentation.
class DegreeError : public Error {
public:
    using Error::Error;
};

/// Two presentations cannot be compared or refined together.
class CompatibilityError : public Error {
public:
    using Error::Error;
};

/// A cochain required to be a cocycle is not one.
class CocycleError : public Error {
public:
    using Error::Error;
};

/// Bundle points passed to the division map lie in different fibers.
class FiberError : public Error {
public:
    using Error::Error;
};

/// The inverse crossed-homomorphism dictionary needs a free action.
class FreenessError : public Error {
public:
    using Error::Error;
};

/// Degree/coefficient combination that no solver handles.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Malformed input text or JSON. `field` names the offending location.
class ParseError : public Error {
public:
    ParseError(std::string field, const std::string& message)
        : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Structural validation of a presentation failed.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace diffcech
