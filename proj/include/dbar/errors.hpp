#pragma once

#include <stdexcept>
#include <string>

namespace dbar {

/// Base class for all library errors.
struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Kernel or integrand evaluated on (or too close to) its singular set.
struct singularity_error : error {
  using error::error;
};

/// Point lies outside the required region (exterior pole, non-interior target, ...).
struct domain_error : error {
  using error::error;
};

/// Result would be silently inaccurate (near-boundary layer-potential evaluation, ...).
struct accuracy_error : error {
  using error::error;
};

/// Malformed configuration, file, or argument.
struct config_error : error {
  using error::error;
};

/// Requested combination is not supported (sampled form with the derivative operator, ...).
struct unsupported_error : error {
  using error::error;
};

/// A numerical computation produced a non-finite or otherwise poisoned value.
struct numeric_error : error {
  using error::error;
};

/// A (0,1)-form failed its dbar-closedness check.
struct closedness_error : error {
  using error::error;
};

}  // namespace dbar
