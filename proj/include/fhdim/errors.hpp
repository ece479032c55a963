#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fhdim {

/// One validation finding, addressed by the dotted field path it concerns
/// (e.g. "load.utilization").
struct Diagnostic {
    std::string field;
    std::string message;
};

/// Thrown when a configuration bundle violates a domain invariant.
/// Carries every violation found, not just the first.
class InvariantViolation : public std::runtime_error {
public:
    explicit InvariantViolation(std::vector<Diagnostic> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<Diagnostic>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<Diagnostic>& vs) {
        std::string out = "invariant violation";
        for (const auto& v : vs) {
            out += "\n  " + v.field + ": " + v.message;
        }
        return out;
    }

    std::vector<Diagnostic> violations_;
};

/// Malformed configuration document (syntax level). Message includes the
/// parser's position information.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally valid document that does not match the schema: unknown key,
/// missing required key, or wrong value type.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fhdim
