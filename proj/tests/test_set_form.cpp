#include <cmath>
#include <random>

#include "bfre/set_form.hpp"
#include "doctest.h"

using namespace bfre;
using Kind = SetForm::Kind;

TEST_CASE("constructors normalize") {
  CHECK(SetForm::interval(0.4, 0.4).kind() == Kind::Singleton);
  CHECK(SetForm::interval(0.5, 0.4).is_empty());
  CHECK(SetForm::two_points(0.3, 0.3 + 1e-12).kind() == Kind::Singleton);
  const auto tp = SetForm::two_points(0.8, 0.2);
  CHECK(tp.lo() == 0.2);
  CHECK(tp.hi() == 0.8);
}

TEST_CASE("membership") {
  CHECK(SetForm::interval(0.2, 0.8).contains(0.2));
  CHECK(SetForm::interval(0.2, 0.8).contains(0.8 + 1e-10));
  CHECK_FALSE(SetForm::interval(0.2, 0.8).contains(0.81));
  CHECK(SetForm::two_points(0.0, 0.8).contains(0.8));
  CHECK_FALSE(SetForm::two_points(0.0, 0.8).contains(0.4));
  CHECK_FALSE(SetForm::empty().contains(0.0));
}

TEST_CASE("intersection shapes") {
  const auto i = SetForm::interval(0.2, 0.8);
  CHECK(intersect(i, SetForm::interval(0.5, 1.0)) == SetForm::interval(0.5, 0.8));
  CHECK(intersect(i, SetForm::interval(0.8, 1.0)) == SetForm::point(0.8));
  CHECK(intersect(i, SetForm::interval(0.9, 1.0)).is_empty());
  CHECK(intersect(SetForm::two_points(0.0, 0.8), i) == SetForm::point(0.8));
  CHECK(intersect(SetForm::two_points(0.2, 0.8), i) == SetForm::two_points(0.2, 0.8));
  CHECK(intersect(SetForm::two_points(0.2, 0.8), SetForm::point(0.2)) == SetForm::point(0.2));
  CHECK(intersect(SetForm::point(0.3), SetForm::point(0.4)).is_empty());
  CHECK(intersect(SetForm::empty(), i).is_empty());
}

TEST_CASE("intersection snaps onto the range bounds") {
  const auto range = SetForm::interval(0.2, 0.8);
  const auto got = intersect(SetForm::point(0.8 + 5e-10), range);
  REQUIRE(got.kind() == Kind::Singleton);
  CHECK(got.lo() == 0.8);
}

TEST_CASE("intersection matches pointwise membership") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> level(0, 20);
  std::uniform_int_distribution<int> shape(0, 3);
  auto draw = [&] {
    const double a = level(rng) / 20.0, b = level(rng) / 20.0;
    switch (shape(rng)) {
      case 0: return SetForm::empty();
      case 1: return SetForm::point(a);
      case 2: return SetForm::two_points(a, b);
      default: return SetForm::interval(std::min(a, b), std::max(a, b));
    }
  };
  for (int n = 0; n < 2000; ++n) {
    const auto a = draw(), b = draw();
    const auto both = intersect(a, b);
    for (int k = 0; k <= 40; ++k) {
      const double v = k / 40.0;
      CHECK(both.contains(v) == (a.contains(v) && b.contains(v)));
    }
    CHECK(subset_of(both, a));
    CHECK(subset_of(both, b));
    CHECK(approx_equal(intersect(a, b), intersect(b, a)));
  }
}

TEST_CASE("subset relation") {
  CHECK(subset_of(SetForm::empty(), SetForm::empty()));
  CHECK(subset_of(SetForm::point(0.8), SetForm::two_points(0.2, 0.8)));
  CHECK_FALSE(subset_of(SetForm::two_points(0.2, 0.8), SetForm::point(0.8)));
  CHECK(subset_of(SetForm::two_points(0.2, 0.8), SetForm::interval(0.0, 1.0)));
  CHECK_FALSE(subset_of(SetForm::interval(0.1, 0.2), SetForm::two_points(0.1, 0.2)));
  CHECK_FALSE(subset_of(SetForm::point(0.5), SetForm::empty()));
}

TEST_CASE("formatting") {
  CHECK(to_string(SetForm::empty()) == "∅");
  CHECK(to_string(SetForm::point(0.6)) == "{0.6}");
  CHECK(to_string(SetForm::two_points(0.0, 0.8)) == "{0,0.8}");
  CHECK(to_string(SetForm::interval(0.2, 0.8)) == "[0.2,0.8]");
  CHECK(to_string(SetForm::point(1.0 - std::sqrt(0.6))) == "{0.225403}");
  CHECK(format_number(-1e-12) == "0");
  CHECK(format_number(10.717) == "10.717");
}
