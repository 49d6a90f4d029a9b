#ifndef CLOSURELAB_ERROR_HPP_
#define CLOSURELAB_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace closurelab {

  // Base class for every structured error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  // Raised when a node, time, or degree limit is hit. Never means "no answer
  // exists"; the computation was abandoned.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  class DegreeMismatch : public Error {
   public:
    DegreeMismatch(std::size_t expected, std::size_t actual)
        : Error("degree mismatch: expected " + std::to_string(expected)
                + ", got " + std::to_string(actual)) {}
  };

  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

}  // namespace closurelab

#endif  // CLOSURELAB_ERROR_HPP_
