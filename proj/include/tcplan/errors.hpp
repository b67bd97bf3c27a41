#pragma once

#include <stdexcept>
#include <string>

namespace tcplan {

// Base of every error raised by the library. Callers that only care about
// "the planner refused" can catch this; tests catch the concrete types.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define TCPLAN_DEFINE_ERROR(Name)                                                                                      \
    class Name : public Error {                                                                                        \
      public:                                                                                                          \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}                                           \
    }

TCPLAN_DEFINE_ERROR(InvalidArgument);
TCPLAN_DEFINE_ERROR(NearZeroVector);
TCPLAN_DEFINE_ERROR(OddDimension);
TCPLAN_DEFINE_ERROR(DimensionMismatch);
TCPLAN_DEFINE_ERROR(JunctionGap);
TCPLAN_DEFINE_ERROR(HomotopyContractViolation);
TCPLAN_DEFINE_ERROR(NotSingleRule);
TCPLAN_DEFINE_ERROR(NoApplicableRule);
TCPLAN_DEFINE_ERROR(OutsideFreeSpace);
TCPLAN_DEFINE_ERROR(WitnessNotFound);

#undef TCPLAN_DEFINE_ERROR

}  // namespace tcplan
