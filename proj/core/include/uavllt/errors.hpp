#pragma once

#include <stdexcept>
#include <string>

namespace uavllt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// GPS fixes (or a fix and a center) that do not determine a trajectory.
class DegenerateFix : public Error {
public:
  using Error::Error;
};

/// The pair is already out of range at the anchor instant.
class LinkNotUp : public Error {
public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
public:
  using Error::Error;
};

/// No boundary-compliant trajectory could be produced, even by the forced turn.
class ResampleExhausted : public Error {
public:
  using Error::Error;
};

class NodeUnknown : public Error {
public:
  using Error::Error;
};

/// Exhaustive enumeration refused because the graph is too large.
class TooLarge : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  using Error::Error;
};

} // namespace uavllt
