#include "bfre/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bfre/errors.hpp"

namespace bfre {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct FamilyInfo {
  Family family;
  std::string_view name;
  bool takes_param;
};

constexpr std::array<FamilyInfo, 10> kFamilyInfo = {{
    {Family::Product, "product", false},
    {Family::Einstein, "einstein", false},
    {Family::Lukasiewicz, "lukasiewicz", false},
    {Family::Frank, "frank", true},
    {Family::Yager, "yager", true},
    {Family::Hamacher, "hamacher", true},
    {Family::Dombi, "dombi", true},
    {Family::SchweizerSklar, "schweizer_sklar", true},
    {Family::SugenoWeber, "sugeno_weber", true},
    {Family::AczelAlsina, "aczel_alsina", true},
}};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilyInfo)
    if (fi.family == f) return fi;
  throw Error(Errc::InvalidParameter, "unknown t-norm family");
}

void check_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0))
    throw Error(Errc::DomainError,
                std::string(what) + " must lie in [0,1], got " + std::to_string(v));
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// s^x - 1 without cancellation for x near 0.
double pow_minus_one(double s, double x) { return std::expm1(x * std::log(s)); }

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

bool family_takes_param(Family f) { return info(f).takes_param; }

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& fi : kFamilyInfo)
    if (fi.name == name) return fi.family;
  return std::nullopt;
}

TNorm TNorm::make(Family family, std::optional<double> param) {
  const auto& fi = info(family);
  if (!fi.takes_param) {
    if (param)
      throw Error(Errc::InvalidParameter,
                  std::string(fi.name) + " takes no parameter");
    return TNorm(family, 0.0);
  }
  if (!param)
    throw Error(Errc::InvalidParameter,
                std::string(fi.name) + " requires a parameter");
  const double p = *param;
  bool ok = std::isfinite(p);
  switch (family) {
    case Family::Frank: ok = ok && p > 0.0 && p != 1.0; break;
    case Family::Yager:
    case Family::Dombi:
    case Family::AczelAlsina: ok = ok && p > 0.0; break;
    case Family::Hamacher: ok = ok && p >= 0.0; break;
    case Family::SchweizerSklar: ok = ok && p != 0.0; break;
    case Family::SugenoWeber: ok = ok && p > -1.0; break;
    default: break;
  }
  if (!ok) {
    std::ostringstream os;
    os << "parameter " << p << " is outside the domain of " << fi.name;
    throw Error(Errc::InvalidParameter, os.str());
  }
  return TNorm(family, p);
}

bool TNorm::strict() const {
  switch (family_) {
    case Family::Lukasiewicz:
    case Family::Yager:
    case Family::SugenoWeber: return false;
    case Family::SchweizerSklar: return param_ < 0.0;
    default: return true;
  }
}

std::string TNorm::describe() const {
  std::ostringstream os;
  os << family_name(family_);
  if (has_param()) os << "(" << param_ << ")";
  return os.str();
}

double TNorm::operator()(double x, double y) const {
  check_unit(x, "x");
  check_unit(y, "y");
  // Boundary laws hold exactly; elsewhere rounding is kept inside [0,1].
  if (x == 1.0) return y;
  if (y == 1.0) return x;
  if (x == 0.0 || y == 0.0) return 0.0;
  return clamp01(closed_form(x, y));
}

double TNorm::closed_form(double x, double y) const {
  const double p = param_;
  switch (family_) {
    case Family::Product: return x * y;
    case Family::Einstein: return x * y / (2.0 - (x + y - x * y));
    case Family::Lukasiewicz: return std::max(0.0, x + y - 1.0);
    case Family::Frank:
      return std::log1p(pow_minus_one(p, x) * pow_minus_one(p, y) / (p - 1.0)) /
             std::log(p);
    case Family::Yager:
      return std::max(
          0.0, 1.0 - std::pow(std::pow(1.0 - x, p) + std::pow(1.0 - y, p), 1.0 / p));
    case Family::Hamacher:
      if (p == 0.0 && x == 0.0 && y == 0.0) return 0.0;
      return x * y / (p + (1.0 - p) * (x + y - x * y));
    case Family::Dombi: {
      if (x == 0.0 || y == 0.0) return 0.0;
      const double s = std::pow((1.0 - x) / x, p) + std::pow((1.0 - y) / y, p);
      return 1.0 / (1.0 + std::pow(s, 1.0 / p));
    }
    case Family::SchweizerSklar:
      if (p < 0.0) {
        if (x == 0.0 || y == 0.0) return 0.0;
        return std::pow(std::pow(x, p) + std::pow(y, p) - 1.0, 1.0 / p);
      }
      {
        // Same guard as the pseudo-inverse: x^p + y^p = 1 must give exactly 0.
        const double base = std::pow(x, p) + std::pow(y, p) - 1.0;
        if (base <= 4.0 * std::numeric_limits<double>::epsilon()) return 0.0;
        return std::pow(base, 1.0 / p);
      }
    case Family::SugenoWeber:
      return std::max(0.0, (x + y - 1.0 + p * x * y) / (1.0 + p));
    case Family::AczelAlsina: {
      if (x == 0.0 || y == 0.0) return 0.0;
      const double s = std::pow(-std::log(x), p) + std::pow(-std::log(y), p);
      return std::exp(-std::pow(s, 1.0 / p));
    }
  }
  return 0.0;
}

double TNorm::generator(double x) const {
  check_unit(x, "x");
  const double p = param_;
  switch (family_) {
    case Family::Product: return x == 0.0 ? kInf : -std::log(x);
    case Family::Einstein: return x == 0.0 ? kInf : std::log((2.0 - x) / x);
    case Family::Lukasiewicz: return 1.0 - x;
    case Family::Frank:
      // -ln((s^x - 1)/(s - 1)) is a valid generator for every s in (0,1)u(1,inf).
      return x == 0.0 ? kInf : -std::log(pow_minus_one(p, x) / (p - 1.0));
    case Family::Yager: return std::pow(1.0 - x, p);
    case Family::Hamacher:
      if (x == 0.0) return kInf;
      if (p == 0.0) return (1.0 - x) / x;
      return std::log((p + (1.0 - p) * x) / x);
    case Family::Dombi: return x == 0.0 ? kInf : std::pow((1.0 - x) / x, p);
    case Family::SchweizerSklar:
      if (p < 0.0 && x == 0.0) return kInf;
      return (1.0 - std::pow(x, p)) / p;
    case Family::SugenoWeber:
      if (p == 0.0) return 1.0 - x;
      return 1.0 - std::log1p(p * x) / std::log1p(p);
    case Family::AczelAlsina: return x == 0.0 ? kInf : std::pow(-std::log(x), p);
  }
  return 0.0;
}

double TNorm::pseudo_inverse(double z) const {
  if (!(z >= 0.0))
    throw Error(Errc::DomainError, "generator values are non-negative");
  const double p = param_;
  switch (family_) {
    case Family::Product: return std::exp(-z);
    case Family::Einstein: return 2.0 / (1.0 + std::exp(z));
    case Family::Lukasiewicz: return std::max(1.0 - z, 0.0);
    case Family::Frank:
      return clamp01(std::log1p((p - 1.0) * std::exp(-z)) / std::log(p));
    case Family::Yager: return std::max(1.0 - std::pow(z, 1.0 / p), 0.0);
    case Family::Hamacher:
      if (p == 0.0) return 1.0 / (1.0 + z);
      return p / (p - 1.0 + std::exp(z));
    case Family::Dombi: return 1.0 / (1.0 + std::pow(z, 1.0 / p));
    case Family::SchweizerSklar:
      if (p < 0.0) return std::pow(1.0 - p * z, 1.0 / p);
      // The root magnifies rounding in z near f(0) = 1/p; a base within a
      // few ulps of zero is zero.
      if (1.0 - p * z <= 4.0 * std::numeric_limits<double>::epsilon()) return 0.0;
      return std::pow(1.0 - p * z, 1.0 / p);
    case Family::SugenoWeber:
      if (p == 0.0) return std::max(1.0 - z, 0.0);
      return std::max(std::expm1((1.0 - z) * std::log1p(p)) / p, 0.0);
    case Family::AczelAlsina: return std::exp(-std::pow(z, 1.0 / p));
  }
  return 0.0;
}

double compose_via_generator(const TNorm& t, double x, double y) {
  return t.pseudo_inverse(t.generator(x) + t.generator(y));
}

std::optional<double> solve_u_closed_form(const TNorm& t, double a, double b) {
  const double p = t.param();
  double u = std::numeric_limits<double>::quiet_NaN();
  switch (t.family()) {
    case Family::Product: u = b / a; break;
    case Family::Einstein: u = (2.0 - a) * b / (a + b - a * b); break;
    case Family::Lukasiewicz: u = 1.0 + b - a; break;
    case Family::Frank:
      u = std::log1p(pow_minus_one(p, b) * (p - 1.0) / pow_minus_one(p, a)) /
          std::log(p);
      break;
    case Family::Yager:
      u = 1.0 - std::pow(std::pow(1.0 - b, p) - std::pow(1.0 - a, p), 1.0 / p);
      break;
    case Family::Hamacher:
      u = (p + (1.0 - p) * a) * b / (a - (1.0 - p) * (1.0 - a) * b);
      break;
    case Family::Dombi:
      u = 1.0 / (1.0 + std::pow(std::pow((1.0 - b) / b, p) -
                                    std::pow((1.0 - a) / a, p),
                                1.0 / p));
      break;
    case Family::SchweizerSklar:
      u = std::pow(1.0 + std::pow(b, p) - std::pow(a, p), 1.0 / p);
      break;
    case Family::SugenoWeber: u = ((1.0 + p) * b + 1.0 - a) / (1.0 + p * a); break;
    case Family::AczelAlsina:
      u = std::exp(-std::pow(std::pow(-std::log(b), p) - std::pow(-std::log(a), p),
                             1.0 / p));
      break;
  }
  if (!std::isfinite(u)) return std::nullopt;
  return u;
}

double solve_u_via_generator(const TNorm& t, double a, double b) {
  const double d = t.generator(b) - t.generator(a);
  return clamp01(t.pseudo_inverse(std::max(d, 0.0)));
}

double solve_u(const TNorm& t, double a, double b) {
  check_unit(a, "a");
  check_unit(b, "b");
  const double e = eps();
  if (a < b - e)
    throw Error(Errc::PreconditionViolated, "solve_u requires a >= b");
  if (std::abs(a - b) <= e) return 1.0;
  if (b <= e) {
    if (t.strict()) return 0.0;
    return clamp01(t.pseudo_inverse(t.generator_at_zero() - t.generator(a)));
  }
  if (a >= 1.0 - e) return b;
  if (auto u = solve_u_closed_form(t, a, b); u && *u >= -e && *u <= 1.0 + e)
    return clamp01(*u);
  return solve_u_via_generator(t, a, b);
}

}  // namespace bfre
