#pragma once

#include <stdexcept>
#include <string>

namespace mms {

/// Malformed input: bad rational strings, inconsistent matrix shapes,
/// out-of-range parameters, references to unknown ids.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// The exact oracle refused a query larger than its configured limit.
class OracleScaleError : public std::runtime_error {
 public:
  explicit OracleScaleError(const std::string& what) : std::runtime_error(what) {}
};

/// A bag-filling pass ran out of goods with some remaining agent below the
/// alpha threshold. At alpha = 10/13 this is unreachable; raising it loudly
/// is part of the contract, not a recoverable condition.
class ApproximationFailure : public std::runtime_error {
 public:
  explicit ApproximationFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mms
