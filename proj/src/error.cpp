#include "bigness/error.hpp"

namespace bigness {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::NotEnumerated: return "NotEnumerated";
    case ErrorKind::ChopBudgetExceeded: return "ChopBudgetExceeded";
    case ErrorKind::TracelessNotComplement: return "TracelessNotComplement";
    case ErrorKind::NoRoots: return "NoRoots";
    case ErrorKind::InfiniteSet: return "InfiniteSet";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::MissingLieOperators: return "MissingLieOperators";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NoSylowFound: return "NoSylowFound";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace bigness
