#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace z2r {

// Base of every error the library throws. The CLI maps these to exit code 1,
// except ParseError which maps to 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

// Enumeration would exceed the caller's word-count limit.
class SizeExceeded : public Error {
public:
    using Error::Error;
};

// Exhaustive search or canonicalization outside its supported parameter range.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

// MacWilliams transform produced a negative or fractional coefficient.
class NonIntegral : public Error {
public:
    using Error::Error;
};

// The 4 | N11 hypothesis of the Z4 bridge does not hold.
class HypothesisFailed : public Error {
public:
    using Error::Error;
};

// One or more operation preconditions failed; each is listed in reasons().
class PreconditionFailed : public Error {
public:
    explicit PreconditionFailed(std::vector<std::string> reasons)
        : Error(join(reasons)), reasons_(std::move(reasons)) {}
    explicit PreconditionFailed(const std::string& reason)
        : PreconditionFailed(std::vector<std::string>{reason}) {}

    const std::vector<std::string>& reasons() const noexcept { return reasons_; }

private:
    static std::string join(const std::vector<std::string>& parts) {
        std::string out;
        for (const auto& p : parts) {
            if (!out.empty()) out += "; ";
            out += p;
        }
        return out;
    }

    std::vector<std::string> reasons_;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace z2r
