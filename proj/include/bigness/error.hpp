#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bigness {

enum class ErrorKind {
  NotPrime,
  DegreeTooLarge,
  NotSquare,
  ShapeMismatch,
  Singular,
  OrderCapExceeded,
  NotEnumerated,
  ChopBudgetExceeded,
  TracelessNotComplement,
  NoRoots,
  InfiniteSet,
  BudgetExceeded,
  NotDominant,
  MissingLieOperators,
  NotNormal,
  NoSylowFound,
  Overflow,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the toolkit carries a machine-readable kind so the
/// CLI can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bigness
