#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cwire {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph construction (duplicate ids, dangling endpoints, ...).
class GraphError : public Error {
public:
    using Error::Error;
};

/// Column-function / height-schedule contract violations and formula-level failures.
class FamilyError : public Error {
public:
    using Error::Error;
};

/// A wiring references vertex or edge ids that do not exist in guest/host.
/// Distinct from semantic validity violations, which validate() reports as data.
class WiringStructureError : public Error {
public:
    using Error::Error;
};

/// A measurement was requested on a wiring that fails validation.
class InvalidWiringError : public Error {
public:
    using Error::Error;
};

/// Canonical wiring construction rejected its input (label inconsistency,
/// unmet precondition, degenerate column count).
class CanonicalError : public Error {
public:
    using Error::Error;
};

/// The exact search refused an instance (size limits, enumeration guard).
class SearchRefusedError : public Error {
public:
    using Error::Error;
};

/// Relation sample is unusable (missing g(C*n) point, non-monotone indices).
class RelationError : public Error {
public:
    using Error::Error;
};

/// Text-format parse failure; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace cwire
