#pragma once

#include <stdexcept>
#include <string>

namespace knotsim {

/// Input could not be parsed. Carries a token position when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, int position = -1)
        : std::runtime_error(msg), position_(position) {}
    int position() const { return position_; }

private:
    int position_;
};

/// A value is outside the mathematical domain of the operation
/// (inadmissible labels, non-unitary regime, wrong strand count, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A Jones-Wenzl denominator vanishes at the chosen root of unity.
class SingularProjectorError : public DomainError {
public:
    explicit SingularProjectorError(const std::string& msg) : DomainError(msg) {}
};

/// The request exceeds an explicit resource cap (state-sum crossing count,
/// projector-expansion label size, ...).
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace knotsim
