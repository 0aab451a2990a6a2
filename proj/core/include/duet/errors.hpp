#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace duet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameters : public Error {
public:
    using Error::Error;
};

/// Rejection sampling gave up on a crowded workspace.
class GenerationFailure : public Error {
public:
    using Error::Error;
};

/// A scene (or other value) violates a named invariant.
class InvariantViolation : public Error {
public:
    InvariantViolation(std::string invariant, const std::string& detail)
        : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

/// Malformed structured text. `line` is 1-based, 0 when unknown; `field` is a
/// JSON-pointer-like path such as "objects[3].r".
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::string field, const std::string& detail)
        : Error(format(line, field, detail)), line_(line), field_(std::move(field)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    static std::string format(std::size_t line, const std::string& field, const std::string& detail) {
        std::string out = "parse error";
        if (line != 0) out += " at line " + std::to_string(line);
        if (!field.empty()) out += " in field '" + field + "'";
        return out + ": " + detail;
    }

    std::size_t line_;
    std::string field_;
};

class InstanceTooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace duet
