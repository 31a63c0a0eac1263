#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invmon {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed text input; carries a 1-based line and column.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": "
                + msg),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  //! A file could not be opened or read.
  class IoError : public Error {
   public:
    using Error::Error;
  };

  //! An argument violates a documented precondition.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! The operation refuses to run on its input (for example a presentation
  //! that is not flagged E-unitary).
  class Refusal : public Error {
   public:
    using Error::Error;
  };

  //! A group oracle could not answer while building a structure that needs
  //! exact answers.
  class OracleError : public Error {
   public:
    using Error::Error;
  };

}  // namespace invmon
