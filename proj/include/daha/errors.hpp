#pragma once

#include <stdexcept>
#include <string>

namespace daha {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DAHA_DEFINE_ERROR(Name)            \
  class Name : public Error {              \
   public:                                 \
    explicit Name(const std::string& what) \
        : Error(#Name ": " + what) {}      \
  }

DAHA_DEFINE_ERROR(IllegalType);
DAHA_DEFINE_ERROR(NotIrreducible);
DAHA_DEFINE_ERROR(ConstantFunction);
DAHA_DEFINE_ERROR(NotARoot);
DAHA_DEFINE_ERROR(NotAReflection);
DAHA_DEFINE_ERROR(DifferentComponents);
DAHA_DEFINE_ERROR(BallTooLarge);
DAHA_DEFINE_ERROR(NotFinite);
DAHA_DEFINE_ERROR(NotAdmissible);
DAHA_DEFINE_ERROR(NotInRelativeGroup);
DAHA_DEFINE_ERROR(NotANormalizerElement);
DAHA_DEFINE_ERROR(TypeNotContained);
DAHA_DEFINE_ERROR(TypesDiffer);
DAHA_DEFINE_ERROR(BallTooSmall);
DAHA_DEFINE_ERROR(NotRelevant);
DAHA_DEFINE_ERROR(InvalidParameters);
DAHA_DEFINE_ERROR(DivisionNotExact);
DAHA_DEFINE_ERROR(TriangularityViolated);
DAHA_DEFINE_ERROR(ParseError);
DAHA_DEFINE_ERROR(InvalidRootData);

#undef DAHA_DEFINE_ERROR

}  // namespace daha
