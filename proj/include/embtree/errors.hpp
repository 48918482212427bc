#pragma once

#include <stdexcept>
#include <string>

namespace embtree {

// All library failures derive from Error so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define EMBTREE_ERROR(Name)                     \
  struct Name : Error {                         \
    explicit Name(const std::string& what)      \
        : Error(std::string(#Name ": ") + what) {} \
  }

EMBTREE_ERROR(DivisionByNonUnit);
EMBTREE_ERROR(NonUnitConstantTerm);
EMBTREE_ERROR(VariableMismatch);
EMBTREE_ERROR(SingularRoot);
EMBTREE_ERROR(NoRootAtOrigin);
EMBTREE_ERROR(DegenerateStepSet);
EMBTREE_ERROR(DegenerateWeights);
EMBTREE_ERROR(DegenerateCharacteristic);
EMBTREE_ERROR(NoPowerSeriesBranch);
EMBTREE_ERROR(SizeTooLarge);
EMBTREE_ERROR(BoundaryCheckFailed);
EMBTREE_ERROR(ConfigParse);
EMBTREE_ERROR(NetworkDisabled);
EMBTREE_ERROR(MalformedBFile);
EMBTREE_ERROR(NonIntegerCoefficients);
EMBTREE_ERROR(IoError);

#undef EMBTREE_ERROR

}  // namespace embtree
