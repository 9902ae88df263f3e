#include "semichar/errors.hpp"

namespace semichar {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kNotAGroup: return "NotAGroup";
    case ErrorKind::kDomain: return "DomainError";
    case ErrorKind::kInvalidGenerator: return "InvalidGenerator";
    case ErrorKind::kInvalidMorphism: return "InvalidMorphism";
    case ErrorKind::kNotAPGroup: return "NotAPGroup";
    case ErrorKind::kNotBifree: return "NotBifree";
    case ErrorKind::kPreconditionViolated: return "PreconditionViolated";
    case ErrorKind::kHNotClosed: return "HNotClosed";
    case ErrorKind::kNotABiset: return "NotABiset";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kUnknownCatalogEntry: return "UnknownCatalogEntry";
  }
  return "Error";
}

}  // namespace semichar
