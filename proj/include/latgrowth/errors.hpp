#pragma once

#include <stdexcept>
#include <string>

namespace latgrowth {

// Every failure the library reports is one of these kinds; the CLI maps
// them onto exit codes.
enum class ErrorKind {
    InvalidArgument,
    ReduciblePolynomial,
    PrecisionExhausted,
    InvalidDiscriminant,
    NotTotallyReal,
    SearchExhausted,
    InvalidT,
    AlphaZero,
    AlphaPossiblySquare,
    SignUncertifiable,
    InvalidType,
    InconsistentOverride,
    NonIntegralOrder,
    EmptyReport,
    ResidueBudgetExceeded,
    Io,
};

char const* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace latgrowth
