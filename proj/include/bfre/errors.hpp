#pragma once

#include <stdexcept>
#include <string>

namespace bfre {

enum class Errc {
  InvalidParameter,
  DomainError,
  PreconditionViolated,
  DimensionMismatch,
  NegativeCost,
  NotAdmissible,
  SearchCapExceeded,
  EnumerationCapExceeded,
  InconsistentReduction,
  InputError,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Process-wide comparison tolerance. Every equality or ordering test on
// membership values goes through this one number.
inline constexpr double kDefaultEps = 1e-9;
double eps();
void set_eps(double value);

}  // namespace bfre
