#pragma once
#include <stdexcept>
#include <string>

namespace obf {

// Input that parses but names no valid mathematical object (bad signature,
// malformed word, inconsistent combinatorial data, ...).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& m) : std::runtime_error(m) {}
};

// Mathematically meaningful failure: the requested quantity does not exist
// for this input (e.g. the braid class is not null-homologous, or a supplied
// chain does not bound the braid).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace obf
