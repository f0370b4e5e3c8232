#pragma once

#include <stdexcept>
#include <string>

namespace howe {

// Base for every error raised by the library. `kind()` is the stable
// machine-readable name used in CLI error JSON.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define HOWE_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                \
  public:                                                                    \
    explicit Name(const std::string& what) : Error(#Name, what) {}           \
  };

HOWE_DEFINE_ERROR(NonExactDivision)
HOWE_DEFINE_ERROR(DomainError)
HOWE_DEFINE_ERROR(InvalidSymbol)
HOWE_DEFINE_ERROR(TypeMismatch)
HOWE_DEFINE_ERROR(OrderViolation)
HOWE_DEFINE_ERROR(NoDual)
HOWE_DEFINE_ERROR(BoundExceeded)
HOWE_DEFINE_ERROR(RankMismatch)
HOWE_DEFINE_ERROR(RangeViolation)
HOWE_DEFINE_ERROR(ParseError)

#undef HOWE_DEFINE_ERROR

}  // namespace howe
