#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kreach {

// Input text could not be parsed; `line` is the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A structural precondition failed (invalid cover, graph/index mismatch, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Deserialization failure with a machine-checkable reason.
class PersistError : public std::runtime_error {
public:
    enum class Code {
        bad_magic,
        bad_version,
        truncated,
        fingerprint_mismatch,
        corrupt,
        io,
    };

    PersistError(Code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Code code() const noexcept { return code_; }

private:
    Code code_;
};

} // namespace kreach
