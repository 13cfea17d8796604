#pragma once

#include <stdexcept>
#include <string>

namespace glat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GLAT_DEFINE_ERROR(Name)            \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

GLAT_DEFINE_ERROR(InvalidArgument);
GLAT_DEFINE_ERROR(DimensionMismatch);
GLAT_DEFINE_ERROR(NotUnimodular);
GLAT_DEFINE_ERROR(NotASublattice);
GLAT_DEFINE_ERROR(NonUnimodularGenerator);
GLAT_DEFINE_ERROR(NonUnimodularConjugator);
GLAT_DEFINE_ERROR(InvalidRank);
GLAT_DEFINE_ERROR(KindUnavailable);
GLAT_DEFINE_ERROR(NotPositiveDefinite);
GLAT_DEFINE_ERROR(FormNotPreserved);
GLAT_DEFINE_ERROR(NotOddPrime);
GLAT_DEFINE_ERROR(HypothesisNotMet);
GLAT_DEFINE_ERROR(NotGStable);
GLAT_DEFINE_ERROR(NotAMember);
GLAT_DEFINE_ERROR(NotPrimePower);
GLAT_DEFINE_ERROR(InvalidCase);
GLAT_DEFINE_ERROR(HorizonTooSmall);
GLAT_DEFINE_ERROR(UnknownFormula);
GLAT_DEFINE_ERROR(MissingExternalData);
GLAT_DEFINE_ERROR(FormatError);

#undef GLAT_DEFINE_ERROR

/// Raised when an enumeration would exceed its configured element cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

inline constexpr std::size_t kDefaultCap = 10'000'000;

}  // namespace glat
