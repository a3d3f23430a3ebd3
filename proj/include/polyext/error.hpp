#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyext {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Text input did not match the expected grammar. `position()` is the
  // zero-based byte offset into the input where matching failed.
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

}  // namespace polyext
