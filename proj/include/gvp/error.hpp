#pragma once

#include <stdexcept>
#include <string>

namespace gvp {

enum class ErrorKind {
  invalid_argument,  // malformed input: bad ids, negative budgets, wrong dimensions
  parse,             // JSON or rational text that cannot be read
  precondition,      // input is well formed but outside the algorithm's domain
  limit_exceeded,    // enumeration or table size over the configured cap
  internal,          // an invariant that should hold by construction did not
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gvp
