#pragma once

#include <stdexcept>
#include <string>

namespace manna {

/// Malformed input data: bad dimensions, null columns, unparsable files.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Unparsable rational literal.
struct FormatError : InputError {
  explicit FormatError(const std::string& what) : InputError(what) {}
};

/// A solver was called on a problem of the wrong classification.
struct NotPositive : std::runtime_error {
  NotPositive() : std::runtime_error("problem is not positive") {}
};
struct NotNegative : std::runtime_error {
  NotNegative() : std::runtime_error("problem is not negative") {}
};
struct NotNull : std::runtime_error {
  NotNull() : std::runtime_error("problem is not null") {}
};

/// Price vector violates the required sign pattern (positive on goods,
/// negative on bads, zero on neutral items).
struct PriceSignError : std::runtime_error {
  explicit PriceSignError(const std::string& what) : std::runtime_error(what) {}
};

/// Criticality check requires a strictly negative profile.
struct NonNegativeComponent : std::runtime_error {
  explicit NonNegativeComponent(const std::string& what)
      : std::runtime_error(what) {}
};

/// Egalitarian rule is undefined when an agent's maximum utility equals
/// its fair share.
struct DegenerateAgent : std::runtime_error {
  explicit DegenerateAgent(const std::string& what)
      : std::runtime_error(what) {}
};

/// Report emission is limited to two-agent problems.
struct NonPlottable : std::runtime_error {
  explicit NonPlottable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace manna
