#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dnapost {

// Instance rejected before any tube work. `kind()` gives a stable tag for
// programmatic handling; the message names the offending element.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// A tube grew past the configured distinct-strand cap. This is the expected
// failure mode of combinatorial blow-up, not a bug; callers may catch it and
// retry with a larger cap.
class CapacityError : public std::runtime_error {
public:
    CapacityError(std::string tube, std::string op, std::uint64_t needed, std::uint64_t cap)
        : std::runtime_error("tube '" + tube + "': " + op + " needs " + std::to_string(needed) +
                             " distinct strands, cap is " + std::to_string(cap)),
          tube_(std::move(tube)), op_(std::move(op)), needed_(needed), cap_(cap) {}
    const std::string& tube() const noexcept { return tube_; }
    const std::string& op() const noexcept { return op_; }
    std::uint64_t needed() const noexcept { return needed_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::string tube_;
    std::string op_;
    std::uint64_t needed_;
    std::uint64_t cap_;
};

// Codeword rejection sampling gave up. Astronomically unlikely for sane
// vertex counts; distinct so tests can assert it never fires.
class CodebookError : public std::runtime_error {
public:
    explicit CodebookError(const std::string& message) : std::runtime_error(message) {}
};

// Runtime failure while executing a tube script; carries the 1-based source
// line of the offending statement.
class ScriptRuntimeError : public std::runtime_error {
public:
    ScriptRuntimeError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

} // namespace dnapost
