#pragma once

#include <stdexcept>
#include <string>

namespace spg {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownVertexError : public Error {
 public:
  explicit UnknownVertexError(const std::string& id)
      : Error("unknown vertex id: " + id), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// Malformed graph input: self-loops, duplicate edges, bad JSON fields, ...
class GraphFormatError : public Error {
 public:
  using Error::Error;
};

// a and b lie in different components.
class NoGeodesicError : public Error {
 public:
  using Error::Error;
};

// A configurable guard was exceeded. `count` holds the exact quantity that
// would have been produced (decimal, since geodesic counts are unbounded).
class LimitExceededError : public Error {
 public:
  LimitExceededError(const std::string& what, std::string count)
      : Error(what), count_(std::move(count)) {}
  const std::string& count() const { return count_; }

 private:
  std::string count_;
};

// Arguments violate an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace spg
