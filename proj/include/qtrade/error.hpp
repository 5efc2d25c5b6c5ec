#pragma once

#include <stdexcept>
#include <string>

namespace qtrade {

// Bad input: out-of-range parameters, malformed documents, invalid gates.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A request that is well-formed but exceeds what the simulator can hold.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Qubit cap from QTRADE_MAX_QUBITS, default 22.
std::size_t max_qubits();

}  // namespace qtrade
