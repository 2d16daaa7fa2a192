#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdclass {

/// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  invalid_spec,   // malformed or semantically invalid ring/graph input
  parse,          // text did not match a grammar; carries a position
  domain,         // operation called outside its precondition
  cap_exceeded,   // basis, element or graph size cap hit
  non_confluent,  // quotient presentation failed axiom certification
  internal,       // an always-on consistency check tripped
};

inline const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::invalid_spec: return "invalid-spec";
  case ErrorKind::parse: return "parse";
  case ErrorKind::domain: return "domain";
  case ErrorKind::cap_exceeded: return "cap-exceeded";
  case ErrorKind::non_confluent: return "non-confluent";
  case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string &message)
      : Error(ErrorKind::parse, message + " at position " +
                                    std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace zdclass
