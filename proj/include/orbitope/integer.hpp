#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitope {

/// Signed integer of unbounded magnitude. Every count and coefficient in the
/// library lives here; nothing passes through floating point.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& x) { return x.str(); }

/// Malformed or out-of-range caller input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity failed (e.g. a division that must be exact was not).
/// Always an implementation bug, never a consequence of valid input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A vector handed in as an h-vector did not transform to a polytopal
/// f-vector.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A brute-force computation was refused because it exceeds the configured
/// size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace orbitope
