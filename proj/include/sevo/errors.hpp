#pragma once

#include <stdexcept>
#include <string>

namespace sevo {

// Base for all library errors so callers can catch one type at the CLI edge.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of an operation (x < 0 etc).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation at a pole / non-integrable singularity.
struct SingularityError : Error {
    explicit SingularityError(const std::string& msg) : Error(msg) {}
};

// Malformed or inconsistent arguments (s > t, j+k > 1, ...).
struct ArgumentError : Error {
    explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

// Parameter combination the closed-form theory does not cover.
struct UnsupportedRegimeError : Error {
    explicit UnsupportedRegimeError(const std::string& msg) : Error(msg) {}
};

// Requested prediction falls outside every theorem's hypotheses; the message
// names the failed condition.
struct OpenRegimeError : Error {
    explicit OpenRegimeError(const std::string& msg) : Error(msg) {}
};

// Adaptive integrator could not reach the target (step underflow etc).
struct OracleError : Error {
    explicit OracleError(const std::string& msg) : Error(msg) {}
};

// Regression / fitting failures (nonpositive data, window too narrow).
struct FitError : Error {
    explicit FitError(const std::string& msg) : Error(msg) {}
};

struct InsufficientSpanError : FitError {
    explicit InsufficientSpanError(const std::string& msg) : FitError(msg) {}
};

// Initial-data ingestion problems (file shape mismatch, under-resolved bump).
struct IngestionError : Error {
    explicit IngestionError(const std::string& msg) : Error(msg) {}
};

struct ResolutionError : Error {
    explicit ResolutionError(const std::string& msg) : Error(msg) {}
};

// Grid fails an admissibility invariant for the requested horizon.
struct GridError : Error {
    explicit GridError(const std::string& msg) : Error(msg) {}
};

// Config parsing/validation; `field` names the offending entry.
struct ConfigError : Error {
    ConfigError(const std::string& field_, const std::string& msg)
        : Error(msg), field(field_) {}
    std::string field;
};

}  // namespace sevo
