#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semichar {

enum class ErrorKind {
  kParse,
  kNotAGroup,
  kDomain,
  kInvalidGenerator,
  kInvalidMorphism,
  kNotAPGroup,
  kNotBifree,
  kPreconditionViolated,
  kHNotClosed,
  kNotABiset,
  kTooLarge,
  kUnknownCatalogEntry,
};

const char* to_string(ErrorKind kind);

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

#define SEMICHAR_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

SEMICHAR_DEFINE_ERROR(NotAGroup, kNotAGroup)
SEMICHAR_DEFINE_ERROR(DomainError, kDomain)
SEMICHAR_DEFINE_ERROR(InvalidGenerator, kInvalidGenerator)
SEMICHAR_DEFINE_ERROR(InvalidMorphism, kInvalidMorphism)
SEMICHAR_DEFINE_ERROR(NotAPGroup, kNotAPGroup)
SEMICHAR_DEFINE_ERROR(NotBifree, kNotBifree)
SEMICHAR_DEFINE_ERROR(PreconditionViolated, kPreconditionViolated)
SEMICHAR_DEFINE_ERROR(HNotClosed, kHNotClosed)
SEMICHAR_DEFINE_ERROR(NotABiset, kNotABiset)
SEMICHAR_DEFINE_ERROR(TooLarge, kTooLarge)
SEMICHAR_DEFINE_ERROR(UnknownCatalogEntry, kUnknownCatalogEntry)

#undef SEMICHAR_DEFINE_ERROR

}  // namespace semichar
