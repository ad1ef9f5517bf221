#include "bfre/errors.hpp"

#include <atomic>
#include <cmath>

namespace bfre {

namespace {
std::atomic<double> g_eps{kDefaultEps};
}

const char* to_string(Errc code) {
  switch (code) {
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::DomainError: return "DomainError";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NegativeCost: return "NegativeCost";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::SearchCapExceeded: return "SearchCapExceeded";
    case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case Errc::InconsistentReduction: return "InconsistentReduction";
    case Errc::InputError: return "InputError";
  }
  return "Unknown";
}

double eps() { return g_eps.load(std::memory_order_relaxed); }

void set_eps(double value) {
  if (!(value > 0.0) || !std::isfinite(value) || value >= 0.5)
    throw Error(Errc::InvalidParameter, "tolerance must lie in (0, 0.5)");
  g_eps.store(value, std::memory_order_relaxed);
}

}  // namespace bfre
