#pragma once

#include <stdexcept>
#include <string>

namespace tunnelwell {

// Numerics
struct NonFiniteIntegrand : std::runtime_error {
    explicit NonFiniteIntegrand(const std::string& msg) : std::runtime_error(msg) {}
};
struct DepthExceeded : std::runtime_error {
    explicit DepthExceeded(const std::string& msg) : std::runtime_error(msg) {}
};
struct NoSignChange : std::runtime_error {
    explicit NoSignChange(const std::string& msg) : std::runtime_error(msg) {}
};
struct DimensionTooSmall : std::runtime_error {
    explicit DimensionTooSmall(const std::string& msg) : std::runtime_error(msg) {}
};

// Expression parsing / evaluation
struct SyntaxError : std::runtime_error {
    SyntaxError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
    std::size_t offset;
};
struct UnknownIdentifier : std::runtime_error {
    explicit UnknownIdentifier(const std::string& msg) : std::runtime_error(msg) {}
};
struct ArityError : std::runtime_error {
    explicit ArityError(const std::string& msg) : std::runtime_error(msg) {}
};
struct MissingBinding : std::runtime_error {
    explicit MissingBinding(const std::string& msg) : std::runtime_error(msg) {}
};
struct DomainError : std::runtime_error {
    DomainError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (expression byte " + std::to_string(off) + ")"), offset(off) {}
    explicit DomainError(const std::string& msg) : std::runtime_error(msg), offset(0) {}
    std::size_t offset;
};

// Potential geometry
struct NotDoubleWell : std::runtime_error {
    explicit NotDoubleWell(const std::string& msg) : std::runtime_error(msg) {}
};
struct ResonanceRegime : std::runtime_error {
    explicit ResonanceRegime(const std::string& msg) : std::runtime_error(msg) {}
};
struct AsymmetryTooLarge : std::runtime_error {
    explicit AsymmetryTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};
struct NoTurningPoint : std::runtime_error {
    explicit NoTurningPoint(const std::string& msg) : std::runtime_error(msg) {}
};
struct LevelAboveBarrier : std::runtime_error {
    explicit LevelAboveBarrier(const std::string& msg) : std::runtime_error(msg) {}
};
struct GeometryMissing : std::runtime_error {
    explicit GeometryMissing(const std::string& msg) : std::runtime_error(msg) {}
};
struct NegativeTime : std::runtime_error {
    explicit NegativeTime(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace tunnelwell
