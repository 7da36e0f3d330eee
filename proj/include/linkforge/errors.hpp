#ifndef LINKFORGE_ERRORS_HPP
#define LINKFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linkforge {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad size, out of range, degenerate shape).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Two points or segments of a link came close enough that an energy diverges.
class DivergenceError : public Error {
public:
  using Error::Error;
};

/// A discrete linking number could not be snapped to an integer.
class ResolutionError : public Error {
public:
  using Error::Error;
};

/// The linking pattern of a configuration differs from the expected one.
class TopologyError : public Error {
public:
  using Error::Error;
};

/// Malformed input file or text.
class ParseError : public Error {
public:
  using Error::Error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace detail
}  // namespace linkforge

#endif  // LINKFORGE_ERRORS_HPP
