#ifndef MINKHYP_ERRORS_HPP
#define MINKHYP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace minkhyp {

// Base for every validation or numerical failure thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define MINKHYP_DEFINE_ERROR(NAME) \
  struct NAME : Error {            \
    using Error::Error;            \
  }

MINKHYP_DEFINE_ERROR(InvalidParams);
MINKHYP_DEFINE_ERROR(NotSpacelike);
MINKHYP_DEFINE_ERROR(NotWeaklySpacelike);
MINKHYP_DEFINE_ERROR(TolUnachievable);
MINKHYP_DEFINE_ERROR(DomainError);
MINKHYP_DEFINE_ERROR(OutOfRange);
MINKHYP_DEFINE_ERROR(LeftDomain);
MINKHYP_DEFINE_ERROR(NonMonotone);
MINKHYP_DEFINE_ERROR(EmptySet);
MINKHYP_DEFINE_ERROR(NoWitness);
MINKHYP_DEFINE_ERROR(NotConvex);
MINKHYP_DEFINE_ERROR(GridTooCoarse);
MINKHYP_DEFINE_ERROR(NewtonStall);
MINKHYP_DEFINE_ERROR(NonConvexIterate);
MINKHYP_DEFINE_ERROR(MonotonicityViolated);
MINKHYP_DEFINE_ERROR(HypothesisViolated);
MINKHYP_DEFINE_ERROR(SearchFailed);
MINKHYP_DEFINE_ERROR(DegenerateCone);
MINKHYP_DEFINE_ERROR(NotStrictlyConvex);

#undef MINKHYP_DEFINE_ERROR

}  // namespace minkhyp

#endif
