#ifndef HAHNEXP_ERRORS_HPP
#define HAHNEXP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hahnexp {

// All domain errors carry a stable machine-readable code alongside the
// human-readable message. The codes are part of the CLI contract.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define HAHNEXP_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what = #Name)               \
            : Error(#Name, what) {}                                  \
    }

HAHNEXP_DEFINE_ERROR(DivisionByZero);
HAHNEXP_DEFINE_ERROR(UndecidedSign);
HAHNEXP_DEFINE_ERROR(NotRepresentable);
HAHNEXP_DEFINE_ERROR(NonPositiveRadicand);
HAHNEXP_DEFINE_ERROR(NonPositiveLogArgument);
HAHNEXP_DEFINE_ERROR(EmptyInterval);
HAHNEXP_DEFINE_ERROR(ConstraintUnsatisfiable);
HAHNEXP_DEFINE_ERROR(NotNegative);
HAHNEXP_DEFINE_ERROR(NotInComponentDomain);
HAHNEXP_DEFINE_ERROR(NotPseudoCauchy);
HAHNEXP_DEFINE_ERROR(NotInValuationRing);
HAHNEXP_DEFINE_ERROR(NotPositive);
HAHNEXP_DEFINE_ERROR(NonRationalExponents);
HAHNEXP_DEFINE_ERROR(NotInfinitesimal);
HAHNEXP_DEFINE_ERROR(NotOnePlusInfinitesimal);
HAHNEXP_DEFINE_ERROR(NotPurelyInfinite);
HAHNEXP_DEFINE_ERROR(MiddleUnsupported);
HAHNEXP_DEFINE_ERROR(NotWellDefined);
HAHNEXP_DEFINE_ERROR(NotContractionAxioms);
HAHNEXP_DEFINE_ERROR(ParseError);
HAHNEXP_DEFINE_ERROR(CutoffUnreachable);

#undef HAHNEXP_DEFINE_ERROR

} // namespace hahnexp

#endif
