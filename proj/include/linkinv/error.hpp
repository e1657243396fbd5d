#pragma once

#include <stdexcept>
#include <string>

namespace linkinv {

/// Base class for every error raised by the library. The CLI maps each
/// subclass onto a distinct exit code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid arguments or violated preconditions.
class UsageError : public Error {
public:
  using Error::Error;
};

/// A computation produced a value that must be a non-negative integer but
/// is not. On well-formed input this cannot happen, so it flags input that
/// violates an assumption (typically a non quasi-smooth weight system).
class IntegrityError : public Error {
public:
  using Error::Error;
};

/// A configured work budget would be exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

/// Unreadable input or unwritable output.
class IoError : public Error {
public:
  using Error::Error;
};

} // namespace linkinv
