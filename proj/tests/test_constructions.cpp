#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "ztile/constructions.hpp"
#include "ztile/search.hpp"

using namespace ztile;

namespace {

LongPeriodParams params(std::uint64_t p1, std::uint64_t p2, std::uint64_t p3, unsigned n) {
  LongPeriodParams p;
  p.p1 = p1;
  p.p2 = p2;
  p.p3 = p3;
  p.n = n;
  return p;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate({}));
    CHECK_THROWS_AS(validate(params(7, 11, 15, 2)), std::invalid_argument);   // 15 not prime
    CHECK_THROWS_AS(validate(params(7, 13, 11, 2)), std::invalid_argument);   // order
    CHECK_THROWS_AS(validate(params(7, 11, 17, 2)), std::invalid_argument);   // 17 >= 2 * 7
    CHECK_THROWS_AS(validate(params(7, 11, 13, 1)), std::invalid_argument);   // n < 2
    CHECK_THROWS_AS(validate(params(7, 11, 13, 9)), std::invalid_argument);   // M overflows
    LongPeriodParams p;
    p.target_beta = 1.5;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p.target_beta = 1.2;
    p.epsilon = 0.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
  }

  TEST_CASE("long-period tiling at (7, 11, 13, 2)") {
    const auto inst = long_period_tiling({});
    CHECK(inst.modulus == 1002001);
    CHECK(inst.tile.size() == 1001);
    CHECK(inst.tile.diameter() == 276652);
    CHECK(inst.base_complement.size() == 1001);
    CHECK(inst.complement.size() == 1001);
    CHECK(inst.shift_a == 12 * (1002001 / 13));
    CHECK(inst.shift_b == 10 * (1002001 / 11) + 6 * (1002001 / 7));
    CHECK(inst.complement != inst.base_complement);

    const auto v = validate_instance(inst);
    CHECK(v.tiles_with_base);
    CHECK(v.tiles_with_shifted);
    CHECK(v.least_period_shifted == 1002001);
    for (const std::uint64_t p : {7, 11, 13}) CHECK((1002001 / p) % v.least_period_base == 0);
    CHECK(v.base_periodic_each_direction);
    CHECK(v.prime_sets_match);
    CHECK(v.diam == 276652);
    CHECK(v.diam_formula == 276652);
    CHECK(v.diam_bound == 429429);
    CHECK(v.diam_bound_holds);
  }

  TEST_CASE("long-period tiling at (11, 13, 17, 2)") {
    const auto inst = long_period_tiling(params(11, 13, 17, 2));
    const auto v = validate_instance(inst);
    CHECK(v.tiles_with_base);
    CHECK(v.tiles_with_shifted);
    CHECK(v.least_period_shifted == inst.modulus);
    CHECK(v.prime_sets_match);
    CHECK(v.diam_bound_holds);
    CHECK(v.diam == v.diam_formula);
  }

  TEST_CASE("generation is deterministic") {
    CHECK(long_period_tiling({}) == long_period_tiling({}));
  }

  TEST_CASE("exponent report") {
    LongPeriodParams p;
    p.target_beta = 1.05;
    p.epsilon = 0.1;
    const auto inst = long_period_tiling(p);
    const auto r = exponent_report(inst);
    CHECK(r.diam == 276652);
    CHECK(r.diam_bound == 429429);
    CHECK(r.diam_bound_holds);
    CHECK(r.achieved_exponent == doctest::Approx(std::log(1002001.0) / std::log(276652.0)));
    CHECK(r.achieved_exponent == doctest::Approx(1.1026).epsilon(1e-3));
    REQUIRE(r.alpha.has_value());
    CHECK(*r.alpha == doctest::Approx(2.9 * 2 / 5));
    CHECK(r.beta_below_alpha_below_three_halves == true);
    CHECK(r.prime_large_enough == false);  // 7^0.1 / 2 < 1
    CHECK(r.final_inequality_holds == true);

    const auto bare = exponent_report(long_period_tiling({}));
    CHECK_FALSE(bare.alpha.has_value());
    CHECK_FALSE(bare.final_inequality_holds.has_value());
  }

  TEST_CASE("alpha approaches 3/2") {
    double previous = 0;
    for (const double n : {2.0, 10.0, 100.0, 1e4, 1e6}) {
      const double eps = 1.0 / n;
      const double alpha = (3 - eps) * n / (2 * n + 1);
      CHECK(alpha > previous);
      previous = alpha;
    }
    CHECK(previous == doctest::Approx(1.5).epsilon(1e-5));
  }

  TEST_CASE("diameter counterexample") {
    const auto a = cyclotomic_square_counterexample(7, 11);
    CHECK(a.diam == 152);
    CHECK(a.modulus == 5929);
    CHECK(a.lcm_spectrum == 5929);
    CHECK(a.eq3_rhs_floor == 5082);
    CHECK(a.diameter_bound_fails);
    CHECK(a.tile.size() == 77);
    CHECK(mask_polynomial(a.tile) == cyclotomic(49) * cyclotomic(121));

    const auto b = cyclotomic_square_counterexample(11, 13);
    CHECK(b.diam == 266);
    CHECK(b.modulus == 20449);
    CHECK(b.eq3_rhs_floor == 18590);
    CHECK(b.diameter_bound_fails);

    CHECK_THROWS_AS(cyclotomic_square_counterexample(7, 17), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_square_counterexample(11, 7), std::invalid_argument);
    CHECK_THROWS_AS(cyclotomic_square_counterexample(8, 11), std::invalid_argument);
  }

  TEST_CASE("counterexamples never satisfy (T2)") {
    const std::pair<std::uint64_t, std::uint64_t> pairs[] = {
        {2, 3}, {3, 5}, {5, 7}, {7, 11}, {7, 13}, {11, 13}, {11, 17}, {11, 19}, {13, 17}, {13, 19}, {13, 23}};
    for (const auto& [p, q] : pairs) {
      const auto r = cyclotomic_square_counterexample(p, q);
      CHECK(r.analysis.spectrum == std::vector<std::uint64_t>{p * p, q * q});
      CHECK_FALSE(r.analysis.t2);
    }
  }

  TEST_CASE("standard_tile examples") {
    CHECK(standard_tile({{2, 1}}) == IntegerSet{0, 1});
    CHECK(standard_tile({{2, 2}}) == IntegerSet{0, 1, 2, 3});
    CHECK(standard_tile({{2, 1}, {3, 1}}) == IntegerSet{0, 2, 3, 4, 5, 7});
    CHECK(standard_tile({{2, 1}, {2, 1}}) == standard_tile({{2, 2}}));
    CHECK_THROWS_AS(standard_tile({{4, 1}}), std::invalid_argument);
  }

  TEST_CASE("standard tiles tile and satisfy (T1) and (T2)") {
    const std::vector<std::vector<std::pair<std::uint64_t, unsigned>>> specs = {
        {{2, 3}}, {{3, 2}}, {{2, 1}, {3, 1}}, {{2, 2}, {3, 1}}, {{2, 1}, {5, 1}},
        {{3, 1}, {5, 1}}, {{2, 1}, {3, 1}, {5, 1}}, {{2, 2}, {3, 2}}, {{7, 1}, {2, 1}}};
    for (const auto& spec : specs) {
      const IntegerSet a = standard_tile(spec);
      std::uint64_t n = 1;
      for (const auto& [p, e] : spec)
        for (unsigned i = 0; i < e; ++i) n *= p;
      CHECK(a.size() == n);
      CHECK(find_complement(a, n).outcome == ComplementOutcome::found);
      CHECK(check_t1(a));
      CHECK(check_t2(a));
    }
  }
}
