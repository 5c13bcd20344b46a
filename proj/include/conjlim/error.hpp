#ifndef CONJLIM_ERROR_HPP
#define CONJLIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace conjlim {

/// Base error for all library failures (dimension mismatches, bad
/// parameters, parse errors).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input text that does not match the accepted grammar.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace conjlim

#endif
