#pragma once

#include <stdexcept>
#include <string>

namespace harnack {

/// A precondition on an argument was violated (range, finiteness, geometry).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A function was evaluated outside its mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The implicit step did not converge after all retries.
class StepFailure : public std::runtime_error {
public:
    StepFailure(const std::string& what, double time, double residual)
        : std::runtime_error(what), time_(time), residual_(residual) {}

    double time() const noexcept { return time_; }
    double residual() const noexcept { return residual_; }

private:
    double time_;
    double residual_;
};

/// A check was asked to verify a conclusion on data violating its hypothesis.
/// Distinct from a failed check: the conclusion was never tested.
class HypothesisFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration could not be parsed or validated; `key()` names the culprit.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error(what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

}  // namespace harnack
