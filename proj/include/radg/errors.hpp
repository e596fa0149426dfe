#pragma once

#include <stdexcept>
#include <string>

namespace radg {

// Every failure raised by the library derives from Error so front ends can
// map the concrete type to an exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidScenario : public Error {
 public:
  using Error::Error;
};

/// Speed ratio above one: no closed-form value exists for the pair.
class UnsupportedRegime : public Error {
 public:
  using Error::Error;
};

/// Coincident players or other zero-measure configurations.
class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

/// A region-specific quantity was requested for a state in the other region.
class RegionMismatch : public Error {
 public:
  using Error::Error;
};

/// Gradient or control direction undefined at the current state.
class SingularControl : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class IntegrationDiverged : public Error {
 public:
  using Error::Error;
};

class NoTermination : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace radg
