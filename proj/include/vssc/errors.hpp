#ifndef VSSC_ERRORS_HPP
#define VSSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vssc {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

#define VSSC_ERROR_TYPE(Name)                                 \
    struct Name : Error {                                     \
        explicit Name(const std::string& m) : Error(#Name ": " + m) {} \
    }

VSSC_ERROR_TYPE(GridMismatch);
VSSC_ERROR_TYPE(NonzeroMean);
VSSC_ERROR_TYPE(SingularPoint);
VSSC_ERROR_TYPE(InvalidSpec);
VSSC_ERROR_TYPE(NonpositiveInput);
VSSC_ERROR_TYPE(DegenerateCurve);
VSSC_ERROR_TYPE(NotGammaCandidate);
VSSC_ERROR_TYPE(CflViolation);
VSSC_ERROR_TYPE(NonFinite);
VSSC_ERROR_TYPE(OutOfDomain);
VSSC_ERROR_TYPE(DegenerateAbscissa);
VSSC_ERROR_TYPE(BracketCollapse);
VSSC_ERROR_TYPE(EmptyBox);
VSSC_ERROR_TYPE(DegeneratePoint);
VSSC_ERROR_TYPE(InsufficientSamples);
VSSC_ERROR_TYPE(EmptyRegion);
VSSC_ERROR_TYPE(NonPositiveNorm);
VSSC_ERROR_TYPE(ParseError);
VSSC_ERROR_TYPE(ValidationError);
VSSC_ERROR_TYPE(CheckpointError);
VSSC_ERROR_TYPE(LockError);

#undef VSSC_ERROR_TYPE

} // namespace vssc

#endif
