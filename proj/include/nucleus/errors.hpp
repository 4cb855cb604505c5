#pragma once

#include <stdexcept>
#include <string>

namespace nucleus {

// Malformed data: ragged matrices, non-finite entries, bad JSON shapes.
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Out-of-domain scalar arguments: p <= 0, m < 2, beta <= 0, ...
class invalid_parameter : public std::runtime_error {
public:
    explicit invalid_parameter(const std::string& what) : std::runtime_error(what) {}
};

// Valid request that cannot be completed: budget exhausted, postcondition
// violated beyond tolerance.
class computation_error : public std::runtime_error {
public:
    explicit computation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nucleus
