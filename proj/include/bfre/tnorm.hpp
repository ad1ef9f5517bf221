#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace bfre {

enum class Family {
  Product,
  Einstein,
  Lukasiewicz,
  Frank,
  Yager,
  Hamacher,
  Dombi,
  SchweizerSklar,
  SugenoWeber,
  AczelAlsina,
};

inline constexpr std::array<Family, 10> kAllFamilies = {
    Family::Product,        Family::Einstein,    Family::Lukasiewicz,
    Family::Frank,          Family::Yager,       Family::Hamacher,
    Family::Dombi,          Family::SchweizerSklar, Family::SugenoWeber,
    Family::AczelAlsina};

// Lowercase names used in problem files ("product", "schweizer_sklar", ...).
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
bool family_takes_param(Family f);

// A continuous Archimedean t-norm given by its closed form, an additive
// generator f and the pseudo-inverse of f.
//
// Generator values live on [0, +inf]; strict families return
// +infinity at x = 0, which is the only non-finite value ever produced.
class TNorm {
 public:
  // Throws Error(InvalidParameter) when the parameter is missing, unexpected
  // or outside the family's domain.
  static TNorm make(Family family, std::optional<double> param = std::nullopt);

  Family family() const { return family_; }
  double param() const { return param_; }
  bool has_param() const { return family_takes_param(family_); }
  bool strict() const;
  bool nilpotent() const { return !strict(); }
  std::string describe() const;

  double operator()(double x, double y) const;  // closed form
  double generator(double x) const;
  double pseudo_inverse(double z) const;
  double generator_at_zero() const { return generator(0.0); }

 private:
  TNorm(Family family, double param) : family_(family), param_(param) {}
  double closed_form(double x, double y) const;  // 0 < x, y < 1

  Family family_;
  double param_;
};

// T evaluated through its generator, f^(-1)(f(x) + f(y)).
double compose_via_generator(const TNorm& t, double x, double y);

// The largest u in [0,1] with T(a, u) = b, i.e. the endpoint of the
// solution set of T(a, x) = b. Requires a >= b (within eps()); throws
// Error(PreconditionViolated) otherwise and Error(DomainError) for arguments
// outside [0,1].
double solve_u(const TNorm& t, double a, double b);

// Family specific closed form of solve_u for the generic case 1 > a > b > 0.
// Returns nullopt when the expression does not evaluate to a finite value.
std::optional<double> solve_u_closed_form(const TNorm& t, double a, double b);

// solve_u computed only through the generator: f^(-1)(f(b) - f(a)).
double solve_u_via_generator(const TNorm& t, double a, double b);

}  // namespace bfre
