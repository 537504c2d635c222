#pragma once

#include <stdexcept>
#include <string>

namespace singlab {

// Base class for all library errors. Subclasses carry a stable code string
// so callers (and the CLI) can dispatch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& what) : Error("InvalidInput", what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what) : Error("SingularMatrix", what) {}
};

struct NonPositiveWeight : Error {
    explicit NonPositiveWeight(const std::string& what) : Error("NonPositiveWeight", what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("IndexOutOfRange", what) {}
};

struct SizeCapExceeded : Error {
    explicit SizeCapExceeded(const std::string& what) : Error("SizeCapExceeded", what) {}
};

struct DimensionTooLow : Error {
    explicit DimensionTooLow(const std::string& what) : Error("DimensionTooLow", what) {}
};

struct DegenerateCrossing : Error {
    explicit DegenerateCrossing(const std::string& what) : Error("DegenerateCrossing", what) {}
};

struct NotALoop : Error {
    explicit NotALoop(const std::string& what) : Error("NotALoop", what) {}
};

struct DegenerateRatio : Error {
    explicit DegenerateRatio(const std::string& what) : Error("DegenerateRatio", what) {}
};

struct NonIsolated : Error {
    explicit NonIsolated(const std::string& what) : Error("NonIsolated", what) {}
};

struct MissingB0Bound : Error {
    explicit MissingB0Bound(const std::string& what) : Error("MissingB0Bound", what) {}
};

}  // namespace singlab
