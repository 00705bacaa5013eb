#pragma once

#include <stdexcept>
#include <string>

namespace lw {

// Error categories map onto CLI exit codes: input/domain problems exit 1,
// solver capacity limits exit 2, consistency-check violations exit 3.

// Malformed input: dimension mismatch, empty set, bad flag combination.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A mathematical hypothesis of the requested bound is not met
// (for example W*w < 2 for the relu recursion, or |lambda| <= 1).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Exact solvers refuse instances beyond their configured size caps.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite value produced during evaluation; message names the layer.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A claimed certificate (Lipschitz constant, cover) failed verification.
struct CertificateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lw
