#ifndef NOOHI_ERRORS_HPP
#define NOOHI_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace noohi {

/// Malformed or inconsistent input (undeclared generator, invalid homomorphism, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A route or operation was called outside its precondition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured search ceiling.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}

  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// JSON input that does not follow the documented schema. `path` is a
/// JSON-path style location such as `$.branches[1].psi`.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant; never caused by user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace noohi

#endif
