#include "alexlab/errors.hpp"

namespace alexlab {

const char* err_name(Err e) {
  switch (e) {
    case Err::DuplicateLabel: return "DuplicateLabel";
    case Err::UnknownEndpoint: return "UnknownEndpoint";
    case Err::UnknownElement: return "UnknownElement";
    case Err::CycleDetected: return "CycleDetected";
    case Err::RedundantCover: return "RedundantCover";
    case Err::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Err::GroupTooLarge: return "GroupTooLarge";
    case Err::TrivialGroup: return "TrivialGroup";
    case Err::NotAHomomorphism: return "NotAHomomorphism";
    case Err::NotCanonicallyLabeled: return "NotCanonicallyLabeled";
    case Err::InconsistentAction: return "InconsistentAction";
    case Err::UnsupportedDimension: return "UnsupportedDimension";
    case Err::NotAComplex: return "NotAComplex";
    case Err::ComplexTooLarge: return "ComplexTooLarge";
    case Err::MatrixBudgetExceeded: return "MatrixBudgetExceeded";
    case Err::InternalAssertionFailed: return "InternalAssertionFailed";
    case Err::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

Caps& default_caps() {
  static Caps caps;
  return caps;
}

}  // namespace alexlab
