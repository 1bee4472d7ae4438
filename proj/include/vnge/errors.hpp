#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vnge {

/// Coarse error class, used by the CLI to pick an exit code:
/// parse errors exit 2, domain errors exit 3, resource caps exit 4.
enum class ErrorCategory { parse, domain, resource };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

struct EdgelessGraph : Error {
    explicit EdgelessGraph(const std::string& msg = "graph has no edges (total weight is zero)")
        : Error(ErrorCategory::domain, msg) {}
};

struct NegativeResultingWeight : Error {
    explicit NegativeResultingWeight(const std::string& msg)
        : Error(ErrorCategory::domain, msg) {}
};

struct MatrixTooLarge : Error {
    explicit MatrixTooLarge(const std::string& msg)
        : Error(ErrorCategory::resource, msg) {}
};

struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& msg)
        : Error(ErrorCategory::domain, msg) {}
};

struct DegenerateSpectrum : Error {
    explicit DegenerateSpectrum(const std::string& msg)
        : Error(ErrorCategory::domain, msg) {}
};

struct TotalWeightNonPositive : Error {
    explicit TotalWeightNonPositive(const std::string& msg)
        : Error(ErrorCategory::domain, msg) {}
};

struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& msg)
        : Error(ErrorCategory::domain, msg) {}
};

struct SeriesTooShort : Error {
    explicit SeriesTooShort(const std::string& msg)
        : Error(ErrorCategory::domain, msg) {}
};

struct DegenerateSeries : Error {
    explicit DegenerateSeries(const std::string& msg)
        : Error(ErrorCategory::domain, msg) {}
};

/// File-format violation; carries the offending line when known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line = 0)
        : Error(ErrorCategory::parse,
                line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Wraps an error raised while processing step `step` of a change stream.
class StreamError : public Error {
public:
    StreamError(std::size_t step, const Error& cause)
        : Error(cause.category(),
                "step " + std::to_string(step) + ": " + cause.what()),
          step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

} // namespace vnge
