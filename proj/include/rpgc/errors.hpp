#ifndef RPGC_ERRORS_HPP
#define RPGC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rpgc {

enum class ErrorCode {
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    ConfigMismatch,
    DivisionByZero,
    NotMonic,
    InfinitePlaceHasNoQuotientRepresentation,
    DegreeTooLarge,
    PreconditionSmallN,
    UnsupportedMultiplicity,
    Infeasible,
    SingularEvaluation,
    QInSupport,
    NoIrreducibleFound,
    SchemaViolation,
    FieldMismatch,
    BaseOutOfRange,
    Unsupported,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace rpgc

#endif
