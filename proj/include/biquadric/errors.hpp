#pragma once

#include <stdexcept>
#include <string>

namespace biquadric {

// Violated operation precondition (bad input). CLI maps this to exit code 2.
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Requested computation exceeds the configured time/memory budget. Exit code 3.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace biquadric
