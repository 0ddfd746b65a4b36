#ifndef ZCROSS_ERROR_HPP
#define ZCROSS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zcross {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input values (non-finite atoms, bad interval families, ...).
class InvalidInput : public Error {
public:
  explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

// Text could not be parsed; `offset` is the byte offset into the input,
// `line` is 1-based when parsing line-oriented files (0 when unknown).
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t offset, std::size_t line = 0)
      : Error(msg), offset(offset), line(line) {}
  std::size_t offset;
  std::size_t line;
};

// A scenario or process description failed validation.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Runtime evaluation failure (division by zero, 0^negative, ...).
class EvalError : public Error {
public:
  explicit EvalError(const std::string& msg) : Error(msg) {}
};

// A documented invariant was violated at runtime.
class InvariantViolation : public Error {
public:
  explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};

// Work size exceeded an explicit cap (e.g. brute-force enumeration).
class OverflowSignal : public Error {
public:
  explicit OverflowSignal(const std::string& msg) : Error(msg) {}
};

}  // namespace zcross

#endif
