#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vhcx {

  // Base class for every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed textual input (complex files, words, cycle notation).
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // An object violates a structural invariant (wrong side, non-bijection,
  // missing corner, ...).
  class StructureError : public Error {
   public:
    using Error::Error;
  };

}  // namespace vhcx
