#pragma once

#include <stdexcept>
#include <string>

namespace krcore {

// Bad configuration or malformed input; maps to exit code 2 in the CLI.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Global search node budget exhausted; maps to exit code 3.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Component too large for exhaustive enumeration; maps to exit code 4.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace krcore
