#pragma once

#include <stdexcept>
#include <string>

namespace tang {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TANG_DEFINE_ERROR(Name)                                        \
    struct Name : Error {                                              \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

TANG_DEFINE_ERROR(AngleSumViolation);
TANG_DEFINE_ERROR(NonConvexAngle);
TANG_DEFINE_ERROR(TooFewVertices);
TANG_DEFINE_ERROR(NonPositiveTangentLength);
TANG_DEFINE_ERROR(IndexOutOfRange);
TANG_DEFINE_ERROR(EqualIndices);
TANG_DEFINE_ERROR(DegenerateTriangle);
TANG_DEFINE_ERROR(NegativeDiscriminant);
TANG_DEFINE_ERROR(InapplicableBound);
TANG_DEFINE_ERROR(NonPositiveSide);
TANG_DEFINE_ERROR(WrongArity);
TANG_DEFINE_ERROR(ParameterOutOfRange);
TANG_DEFINE_ERROR(ResolutionTooCoarse);
TANG_DEFINE_ERROR(NonConvergent);
TANG_DEFINE_ERROR(UnsupportedExponent);
TANG_DEFINE_ERROR(UnknownTable);
TANG_DEFINE_ERROR(UnknownCurve);

#undef TANG_DEFINE_ERROR

} // namespace tang
