#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

/// An engine refused to start or aborted because it would enumerate more
/// objects than the configured budget allows.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string what, std::uint64_t budget, std::string required)
        : std::runtime_error(std::move(what)), budget_(budget), required_(std::move(required)) {}

    std::uint64_t budget() const { return budget_; }
    /// Decimal size of the enumeration that was requested ("unknown" when
    /// the engine only discovers the size while running).
    const std::string& required() const { return required_; }

private:
    std::uint64_t budget_;
    std::string required_;
};

/// An intersection spectrum that no family of actual sets can realize
/// (some Venn part would need a negative cardinality).
class UnrealizableSpectrum : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ramsey
