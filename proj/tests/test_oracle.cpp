#include <cmath>
#include <random>

#include "bfre/optimize.hpp"
#include "bfre/oracle.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace bfre;

TEST_CASE("brute force on the worked example") {
  const auto p = fixtures::example1();
  const auto t = build_tables(p);
  const auto all = oracle::all_admissible(t);
  CHECK(!all.empty());
  CHECK(all.size() <= 6912);
  for (const auto& e : all) CHECK(is_admissible(e, t));
  const auto bf = oracle::brute_force_optimum(p);
  REQUIRE(bf.feasible);
  CHECK(std::abs(bf.objective - 10.717) <= 1e-9);
  CHECK(oracle::cross_check(p).agree);
}

TEST_CASE("solver agrees with brute force on small random instances") {
  std::mt19937_64 rng(99);
  const std::vector<TNorm> norms = {TNorm::make(Family::Lukasiewicz), TNorm::make(Family::Product),
                                    TNorm::make(Family::Yager, 2.0),
                                    TNorm::make(Family::Hamacher, 1.0),
                                    TNorm::make(Family::Frank, 0.5),
                                    TNorm::make(Family::SchweizerSklar, -1.0)};
  std::size_t feasible = 0;
  for (int n = 0; n < 240; ++n) {
    const auto& t = norms[n % norms.size()];
    oracle::InstanceShape shape;
    shape.rows = 1 + n % 4;
    shape.cols = 1 + (n / 4) % 4;
    shape.planted = n % 5 != 0;
    const auto p = oracle::random_instance(rng, t, shape);
    const auto a = oracle::cross_check(p);
    feasible += a.oracle_feasible;
    CAPTURE(n);
    for (const auto& m : a.mismatches) MESSAGE(m);
    CHECK(a.agree);
  }
  CHECK(feasible > 100);
}

TEST_CASE("grid census finds no mismatch on two-variable instances") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 20; ++n) {
    oracle::InstanceShape shape;
    shape.rows = 2 + n % 2;
    shape.cols = 2;
    shape.grid = 0.05;
    const auto p = oracle::random_instance(rng, TNorm::make(Family::Lukasiewicz), shape);
    const auto c = oracle::grid_census(p, 0.05);
    CHECK(c.points == 441);
    CHECK(c.box_mismatches == 0);
    CHECK(c.criterion_mismatches == 0);
  }
}

TEST_CASE("planted instances are feasible") {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 50; ++n) {
    const auto p = oracle::random_instance(rng, TNorm::make(Family::Yager, 2.0), {});
    CHECK(oracle::brute_force_optimum(p).feasible);
  }
}
