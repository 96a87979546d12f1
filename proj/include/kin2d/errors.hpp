#pragma once

#include <stdexcept>
#include <string>

namespace kin2d {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define KIN2D_DEFINE_ERROR(Name)                                   \
    struct Name : Error {                                          \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    };

KIN2D_DEFINE_ERROR(ParallelLines)
KIN2D_DEFINE_ERROR(DegenerateTriangle)
KIN2D_DEFINE_ERROR(NoConvergence)
KIN2D_DEFINE_ERROR(NoBracket)
KIN2D_DEFINE_ERROR(SingularJacobian)
KIN2D_DEFINE_ERROR(DomainError)
KIN2D_DEFINE_ERROR(BadPartition)
KIN2D_DEFINE_ERROR(NotClosed)
KIN2D_DEFINE_ERROR(SingularPoint)
KIN2D_DEFINE_ERROR(NoEnvelopePoint)
KIN2D_DEFINE_ERROR(Unassemblable)
KIN2D_DEFINE_ERROR(StretchedSingular)
KIN2D_DEFINE_ERROR(PoleAtInfinity)
KIN2D_DEFINE_ERROR(Undefined)
KIN2D_DEFINE_ERROR(FollowerSingular)

#undef KIN2D_DEFINE_ERROR

} // namespace kin2d
