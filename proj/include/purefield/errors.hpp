#ifndef PUREFIELD_ERRORS_HPP
#define PUREFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace purefield {

// Reasons an input (n, a) or an operation hypothesis can be rejected.
// These map one-to-one onto the CLI's machine-readable reason strings.
enum class ValidationCode {
    BadInput,        // n < 2, a = 0, malformed element string, ...
    UnitRadicand,    // |a| = 1
    ExcludedPrime,   // some p | n divides a with v_p(a) not coprime to p
    Reducible,       // x^n - a fails the Capelli irreducibility test
    NotNthPowerFree, // |a| divisible by an n-th power > 1
    NotSquarefree,   // periodicity requires squarefree radicands
    NotCongruent,    // periodicity requires a == a' mod n*p_1*...*p_k
};

const char* code_string(ValidationCode code);

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input violates a documented hypothesis; carries a machine-readable code.
class ValidationError : public Error {
  public:
    ValidationError(ValidationCode code, const std::string& msg)
        : Error(msg), code_(code) {}
    ValidationCode code() const { return code_; }

  private:
    ValidationCode code_;
};

// Operation misuse: mismatched fields, zero where nonzero required, ...
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A Q-linearly dependent list where an independent one is required.
class RankError : public Error {
  public:
    explicit RankError(const std::string& msg) : Error(msg) {}
};

} // namespace purefield

#endif
