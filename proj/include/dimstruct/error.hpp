#pragma once

#include <stdexcept>
#include <string>

namespace dimstruct {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: unknown names, bad shapes, parse failures.
/// The CLI maps these to exit code 2.
class InputError : public Error {
public:
  using Error::Error;
};

/// A mathematical condition does not hold (an axiom, a precondition of a
/// construction, a verification). The CLI maps these to exit code 1.
class Violation : public Error {
public:
  using Error::Error;
};

#define DIMSTRUCT_DEFINE_ERROR(Name, Base)                                      \
  class Name : public Base {                                                   \
  public:                                                                      \
    using Base::Base;                                                          \
  }

DIMSTRUCT_DEFINE_ERROR(ParseError, InputError);
DIMSTRUCT_DEFINE_ERROR(CycleError, InputError);
DIMSTRUCT_DEFINE_ERROR(UnknownElement, InputError);
DIMSTRUCT_DEFINE_ERROR(UnknownPoint, InputError);
DIMSTRUCT_DEFINE_ERROR(TotalityError, InputError);
DIMSTRUCT_DEFINE_ERROR(DisjointnessError, InputError);
DIMSTRUCT_DEFINE_ERROR(ShapeError, InputError);
DIMSTRUCT_DEFINE_ERROR(NotAPartialOrder, InputError);
DIMSTRUCT_DEFINE_ERROR(NotSurjective, InputError);
DIMSTRUCT_DEFINE_ERROR(EqualPoints, InputError);
DIMSTRUCT_DEFINE_ERROR(NegativeInput, InputError);
DIMSTRUCT_DEFINE_ERROR(UnsupportedForm, InputError);
DIMSTRUCT_DEFINE_ERROR(UnknownName, InputError);
DIMSTRUCT_DEFINE_ERROR(EmptySet, InputError);
DIMSTRUCT_DEFINE_ERROR(WindowTooSmall, InputError);

DIMSTRUCT_DEFINE_ERROR(PreconditionError, Violation);
DIMSTRUCT_DEFINE_ERROR(CombinerLawError, Violation);
DIMSTRUCT_DEFINE_ERROR(NotASubstructure, Violation);
DIMSTRUCT_DEFINE_ERROR(MissingInfimum, Violation);
DIMSTRUCT_DEFINE_ERROR(VerificationError, Violation);
DIMSTRUCT_DEFINE_ERROR(NotDecreasing, Violation);
DIMSTRUCT_DEFINE_ERROR(PrecisionError, Violation);

#undef DIMSTRUCT_DEFINE_ERROR

} // namespace dimstruct
