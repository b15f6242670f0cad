#pragma once

#include <stdexcept>
#include <string>

namespace mist {

enum class ErrorKind {
  DisconnectedInput,
  SizeCapExceeded,
  StaleWitness,
  ArityMismatch,
  PreconditionViolated,
  NonTermination,
  InternalInvariant,
  BadParams,
};

const char* to_string(ErrorKind kind);

class MistError : public std::runtime_error {
 public:
  MistError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mist
