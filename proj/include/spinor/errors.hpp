#ifndef SPINOR_ERRORS_HPP
#define SPINOR_ERRORS_HPP

#include <stdexcept>

namespace spinor {

#define SPINOR_DEFINE_ERROR(Name)              \
  class Name : public std::runtime_error {     \
   public:                                     \
    using std::runtime_error::runtime_error;   \
  }

SPINOR_DEFINE_ERROR(NotInGroup);
SPINOR_DEFINE_ERROR(UncalibratedFamily);
SPINOR_DEFINE_ERROR(NoProfileSatisfies);
SPINOR_DEFINE_ERROR(MultipleProfiles);
SPINOR_DEFINE_ERROR(NotRankOne);
SPINOR_DEFINE_ERROR(NotUnitTrace);
SPINOR_DEFINE_ERROR(ReductionStalled);
SPINOR_DEFINE_ERROR(VerificationFailed);
SPINOR_DEFINE_ERROR(ImpossibleCaseReached);
SPINOR_DEFINE_ERROR(NormNotOne);
SPINOR_DEFINE_ERROR(PreconditionViolated);

#undef SPINOR_DEFINE_ERROR

}  // namespace spinor

#endif
