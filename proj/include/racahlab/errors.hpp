#pragma once

#include <stdexcept>
#include <string>

namespace racahlab {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shifted or supplied parameters violate the Params3 / WilsonParams invariants.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace racahlab
