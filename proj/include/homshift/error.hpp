#pragma once

#include <stdexcept>
#include <string>

namespace homshift {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A degree, dimension or level exceeded the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An argument violated an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed to converge or produced a non-finite value.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. `path` names the offending field, e.g. "weights.a[3]".
class ConfigError : public Error {
 public:
  ConfigError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace homshift
