#pragma once

#include <stdexcept>

namespace chainseif {

/// Malformed input or a violated precondition (bad tuple, shape mismatch, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Valid input that lies outside the hypotheses a particular method is stated for.
class UnsupportedInput : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// An internal cross-check that can only fail on a bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A floating-point procedure did not reach its accuracy contract.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root continuation could not continue without risking a mislabelled root.
class TrackingFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

}  // namespace chainseif
