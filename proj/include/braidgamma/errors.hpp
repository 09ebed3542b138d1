#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidgamma {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicateIndex : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// Two words or classes over different groups were compared.
class TagMismatch : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ValidationFailed : public Error {
 public:
  using Error::Error;
};

/// The path is not "good": five points on a wall at once, a collision, or a
/// tuple that is cocircular/coplanar at a segment endpoint.
class Degenerate : public Error {
 public:
  using Error::Error;
};

class CollinearTriple : public Error {
 public:
  using Error::Error;
};

class EndpointMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace braidgamma
