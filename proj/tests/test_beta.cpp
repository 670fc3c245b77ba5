#include <doctest.h>

#include <cmath>

#include "hillwalk/beta.hpp"
#include "hillwalk/report.hpp"

using namespace hillwalk;

TEST_CASE("oracle: inner and outer walk sums") {
  CHECK(inner_walk_sum(3, 3) == ExactScalar(Rational(1, 86400)));
  CHECK(outer_walk_sum(3, 3) == ExactScalar(Rational(1, 51840)));
  CHECK(outer_walk_sum_gamma_form(3, 3) == outer_walk_sum(3, 3));
  CHECK(inner_outer_ratio(3, 3) == ExactScalar(Rational(3, 5)));
  CHECK(inner_outer_ratio(3, 2) == ExactScalar(Rational(1, 2)));
  CHECK(inner_outer_ratio(4, 2) == ExactScalar(Rational(1, 3)));
}

TEST_CASE("oracle: straight walks") {
  const auto p = two_term(1, 1, 1, 3).params;
  CHECK(straight_walk_plus(p, 2) == ExactScalar(Rational(1, 36)));
  CHECK(straight_walk_minus(p, 2) == ExactScalar(Rational(1, 14745600)));
}

TEST_CASE("oracle: beta values for (1,1,1,3)") {
  const auto pot = two_term(1, 1, 1, 3);
  const auto minus = beta_minus(pot, 5, 0, 0);
  CHECK(minus.value == ExactScalar(Rational(1, 147456)));
  CHECK(minus.value == unit_descent_weight(1, 5));

  const auto plus = beta_plus(pot, 8, 0, 2);
  const ExactScalar expected =
      ExactScalar(Rational(-1, 129600)) +
      ExactScalar(make_rational(479, Integer("1545067560960000"))) +
      ExactScalar(make_rational(10779533, Integer("38484671358012751872000000")));
  CHECK(plus.value == expected);
  CHECK(plus.shells_used == 3);
  CHECK(plus.exact_through_shell == 2);
}

TEST_CASE("oracle: alpha over two-step closed walks") {
  const auto pot = two_term(1, 1, 1, 1);
  CHECK(alpha_n(pot.potential, 4, 0, 2).value == ExactScalar(Rational(1, 30)));
}

TEST_CASE("tail estimate never enters the value") {
  const auto pot = two_term(1, 1, 1, 3);
  const auto b = beta_plus(pot, 11, ExactScalar(Rational(1, 2)), 3);
  ExactScalar sum;
  for (const auto& v : b.shell_values) sum += v;
  CHECK(sum == b.value);
  CHECK_FALSE(b.tail.unbounded);
  CHECK(b.tail.value > 0);
  CHECK(b.tail.value < 1e-20);
}

TEST_CASE("tail estimate is unbounded for large coefficients at small n") {
  const auto pot = two_term(50, 50, 1, 3);
  CHECK(beta_plus(pot, 2, 0, 1).tail.unbounded);
}

TEST_CASE("shell-zero closed forms hold where they apply") {
  for (long s = 3; s <= 5; ++s) {
    const auto pot = two_term(ExactScalar(Rational(2, 3)), ExactScalar(Rational(-1, 2), 1), 1, s);
    for (long n = 2; n <= 3 * s; ++n) {
      for (const auto& check : shell_zero_checks(pot, n)) {
        CAPTURE(check.name);
        CAPTURE(n);
        CHECK(check.matches());
      }
    }
  }
  const auto pot = two_term(1, 1, 2, 3);
  const auto checks = shell_zero_checks(pot, 12);
  REQUIRE(checks.size() == 2);
  CHECK(checks[0].matches());
  CHECK(checks[1].matches());
}

TEST_CASE("binomial series coefficients") {
  const Rational alpha(1, 3);
  CHECK(binomial_series_coefficient(alpha, 0) == ExactScalar(0));
  CHECK(binomial_series_coefficient(alpha, 1) == ExactScalar(alpha));
  // α(1−α)/2 = 1/9
  CHECK(binomial_series_coefficient(alpha, 2) == ExactScalar(Rational(1, 9)));
  for (long m = 2; m <= 10; ++m) {
    CHECK(inner_outer_ratio_gamma_form(5, m) == inner_outer_ratio(5, m));
  }
}

TEST_CASE("leading terms match cap 0 and approach the capped sums") {
  const auto pot = two_term(1, 1, 1, 3);
  const auto& p = pot.params;
  double first = -1.0;
  double last = 0.0;
  for (long m = 3; m <= 9; ++m) {
    CAPTURE(m);
    const ExactScalar cap0 = p.a * p.b.pow(m) * (inner_walk_sum(3, m) - outer_walk_sum(3, m));
    const double lead = beta_plus_leading(p, m).leading.re().to_double();
    CHECK(lead == doctest::Approx(cap0.re().get_d()).epsilon(1e-14));
    const double full = beta_plus(pot, 3 * m - 1, 0, 3).value.re().get_d();
    last = std::abs(lead / full - 1.0);
    if (first < 0) first = last;
    CHECK(last < 1e-6);
  }
  CHECK(last < first);

  const auto minus = beta_minus_leading(1, 7);
  CHECK(minus.leading.re().to_double() ==
        doctest::Approx(unit_descent_weight(1, 7).re().get_d()).epsilon(1e-12));
}

TEST_CASE("equal-frequency leading term is the straight walk") {
  const auto p = two_term(ExactScalar(Rational(1, 2)), 3, 2, 2).params;
  for (long m = 1; m <= 4; ++m) {
    CHECK(beta_equal_leading(p, WalkKind::X, m).leading.re().to_double() ==
          doctest::Approx(straight_walk_plus(p, m).re().get_d()).epsilon(1e-12));
    CHECK(beta_equal_leading(p, WalkKind::Y, m).leading.re().to_double() ==
          doctest::Approx(straight_walk_minus(p, m).re().get_d()).epsilon(1e-12));
  }
}

TEST_CASE("general potentials use step caps") {
  const FourierPotential pot({{-2, ExactScalar(1)}, {6, ExactScalar(1)}});
  const auto tt = two_term(1, 1, 1, 3);
  // Cap 3 admits exactly the shell-0 walks at n = 5.
  CHECK(walk_sum(pot, 5, WalkKind::X, 0, 3).value == beta_plus(tt, 5, 0, 0).value);
}
