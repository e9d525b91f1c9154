#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dwb {

enum class ErrorKind {
  DivisionByZero,
  NotAMultiple,
  ModulusMismatch,
  TooLarge,
  NotPrime,
  BadSubfield,
  ZeroInput,
  BadN,
  TrivialAdditive,
  SizeMismatch,
  BadParams,
  BadT,
  Infeasible,
  UnsupportedN,
  NotSignDefinite,
  NotEquivariant,
  MissingLambda,
  AllRatiosUndefined,
  Config,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dwb
