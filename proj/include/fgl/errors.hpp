#pragma once

#include <stdexcept>
#include <string>

namespace fgl {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An evaluation argument exceeded the representable range of a Young
/// function (its domain_cap). Raised instead of propagating infinities.
struct OverflowDomain : Error {
  explicit OverflowDomain(const std::string& what) : Error(what) {}
};

/// A monotone root search could not bracket its target below the overflow cap.
struct BracketFailure : Error {
  explicit BracketFailure(const std::string& what) : Error(what) {}
};

/// Adaptive quadrature exhausted its evaluation budget before reaching tolerance.
struct QuadratureNonConvergence : Error {
  explicit QuadratureNonConvergence(const std::string& what) : Error(what) {}
};

/// A structural integrability condition failed its numeric check.
struct ConditionViolated : Error {
  explicit ConditionViolated(const std::string& what) : Error(what) {}
};

/// Invalid grid construction parameters.
struct InvalidGrid : Error {
  explicit InvalidGrid(const std::string& what) : Error(what) {}
};

/// A requested constraint level cannot be reached without overflowing.
/// Carries the largest level that was reachable.
struct LevelUnreachable : Error {
  double max_reachable;
  LevelUnreachable(const std::string& what, double reachable)
      : Error(what), max_reachable(reachable) {}
};

/// The duality pairing used for multiplier extraction was degenerate.
struct DegeneratePairing : Error {
  explicit DegeneratePairing(const std::string& what) : Error(what) {}
};

/// Measures of two domains disagree where they are required to match.
struct MeasureMismatch : Error {
  explicit MeasureMismatch(const std::string& what) : Error(what) {}
};

/// Malformed configuration (catalog strings, config files, CLI arguments).
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace fgl
