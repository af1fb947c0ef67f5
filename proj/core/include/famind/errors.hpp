#pragma once

#include <stdexcept>
#include <string>

namespace famind {

// Every failure mode of the library is one of these. `kind()` is a stable
// machine-readable tag, the what() string carries the specifics.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

#define FAMIND_DEFINE_ERROR(Name)                                \
  class Name : public Error {                                    \
  public:                                                        \
    explicit Name(const std::string& msg) : Error(#Name, msg) {} \
  }

FAMIND_DEFINE_ERROR(CapExceeded);
FAMIND_DEFINE_ERROR(InvalidPermutation);
FAMIND_DEFINE_ERROR(SingularMatrix);
FAMIND_DEFINE_ERROR(ElementNotInGroup);
FAMIND_DEFINE_ERROR(NotNormal);
FAMIND_DEFINE_ERROR(NotAHomomorphism);
FAMIND_DEFINE_ERROR(InvalidRank);
FAMIND_DEFINE_ERROR(InvalidEll);
FAMIND_DEFINE_ERROR(SamePrime);
FAMIND_DEFINE_ERROR(OutOfRange);
FAMIND_DEFINE_ERROR(SemistabilityViolated);
FAMIND_DEFINE_ERROR(NotSurjective);
FAMIND_DEFINE_ERROR(CharacteristicDividesOrder);
FAMIND_DEFINE_ERROR(ParseError);
FAMIND_DEFINE_ERROR(InvalidArgument);

#undef FAMIND_DEFINE_ERROR

}  // namespace famind
