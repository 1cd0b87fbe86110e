#ifndef EGGERT_ERROR_HPP_
#define EGGERT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace eggert {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised when arities fail to chain.
  class ArityError : public Error {
   public:
    using Error::Error;
  };

  class UnknownGenerator : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), _pos(pos) {}

    std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

}  // namespace eggert

#endif  // EGGERT_ERROR_HPP_
