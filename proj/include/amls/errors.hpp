#pragma once

#include <stdexcept>
#include <string>

namespace amls {

/// Thrown when an iterative solver fails to reach its tolerance within the
/// iteration cap. The message carries the solver state for diagnostics.
class tolerance_error : public std::runtime_error {
public:
    explicit tolerance_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an extension oracle returns a set violating its contract.
class oracle_contract_error : public std::runtime_error {
public:
    explicit oracle_contract_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace amls
