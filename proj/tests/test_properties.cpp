#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "hillwalk/beta.hpp"
#include "hillwalk/criteria.hpp"
#include "hillwalk/report.hpp"
#include "hillwalk/walks.hpp"

using namespace hillwalk;

namespace {

ExactScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  ExactScalar x(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
  return x.is_zero() ? ExactScalar(1) : x;
}

}  // namespace

TEST_CASE("Pascal's rule for the shell size bound") {
  for (long n = 1; n <= 20; ++n) {
    for (long k = 1; k < n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("shell dynamic program equals enumeration on random inputs") {
  std::mt19937 rng(20240531);
  std::uniform_int_distribution<long> freq(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const long R = freq(rng);
    const long S = freq(rng);
    const auto pot = two_term(random_scalar(rng), random_scalar(rng), R, S);
    const ExactScalar z(make_rational(1, 1 + trial), make_rational(-1, 2 + trial));
    for (long n = 1; n <= 9; ++n) {
      for (const WalkKind kind : {WalkKind::X, WalkKind::Y, WalkKind::W}) {
        for (long shell = 0; shell <= 1; ++shell) {
          CAPTURE(R);
          CAPTURE(S);
          CAPTURE(n);
          ExactScalar listed;
          for (const auto& w : enumerate_shell(pot.params, n, kind, shell)) {
            CHECK(is_admissible(w));
            listed += weight(w, pot.potential, z);
          }
          CHECK(shell_sum(pot.params, n, kind, shell, z) == listed);
        }
      }
    }
  }
}

TEST_CASE("negating vertices maps X walks onto Y walks of the mirrored potential") {
  // x ↦ −x turns a e^{−2iRx} + b e^{2iSx} into b e^{−2iSx} + a e^{2iRx}.
  const ExactScalar a(Rational(2, 3), 1);
  const ExactScalar b(Rational(-1, 2));
  const ExactScalar z(Rational(1, 7), Rational(2, 9));
  for (const auto& [R, S] : {std::pair{1L, 3L}, std::pair{2L, 3L}, std::pair{1L, 2L}}) {
    const auto pot = two_term(a, b, R, S);
    const auto mirror = two_term(b, a, S, R);
    for (long n = 1; n <= 12; ++n) {
      for (long shell = 0; shell <= 2; ++shell) {
        CAPTURE(n);
        const auto xs = enumerate_shell(pot.params, n, WalkKind::X, shell);
        const auto ys = enumerate_shell(mirror.params, n, WalkKind::Y, shell);
        REQUIRE(xs.size() == ys.size());
        std::vector<std::vector<long>> negated;
        for (const auto& w : xs) {
          std::vector<long> steps;
          for (long st : w.steps) steps.push_back(-st);
          negated.push_back(steps);
        }
        std::sort(negated.begin(), negated.end());
        std::vector<std::vector<long>> mirrored;
        for (const auto& w : ys) mirrored.push_back(w.steps);
        std::sort(mirrored.begin(), mirrored.end());
        CHECK(negated == mirrored);
        CHECK(shell_sum(pot.params, n, WalkKind::X, shell, z) ==
              shell_sum(mirror.params, n, WalkKind::Y, shell, z));
      }
    }
  }
}

TEST_CASE("translation rescales beta by a unimodular factor and leaves t_n fixed") {
  // v(x + c) multiplies V(m) by e^{imc}; with λ = e^{2ic} = (3+4i)/5 the
  // coefficient a picks up λ^{−R} and b picks up λ^S.
  const ExactScalar lambda(Rational(3, 5), Rational(4, 5));
  const ExactScalar a(1);
  const ExactScalar b(Rational(3, 2));
  for (const auto& [R, S] : {std::pair{1L, 3L}, std::pair{1L, 1L}, std::pair{2L, 3L}}) {
    const auto pot = two_term(a, b, R, S);
    const auto moved = two_term(a * lambda.conj().pow(R), b * lambda.pow(S), R, S);
    for (long n = 1; n <= 10; ++n) {
      CAPTURE(n);
      const auto bp = beta_plus(pot, n, 0, 2).value;
      const auto bm = beta_minus(pot, n, 0, 2).value;
      CHECK(beta_plus(moved, n, 0, 2).value == bp * lambda.pow(n));
      CHECK(beta_minus(moved, n, 0, 2).value == bm * lambda.conj().pow(n));
      CHECK(alpha_n(moved.potential, n, 0, 6).value == alpha_n(pot.potential, n, 0, 6).value);
      if (!bp.is_zero() && !bm.is_zero()) {
        CHECK(beta_imbalance(beta_plus(moved, n, 0, 2).value, beta_minus(moved, n, 0, 2).value) ==
              doctest::Approx(beta_imbalance(bp, bm)));
      }
    }
  }
}

TEST_CASE("t_n is at least one wherever it is defined") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pot = two_term(random_scalar(rng), random_scalar(rng), 1, 1 + trial % 3);
    for (long n = 2; n <= 8; ++n) {
      const auto bp = beta_plus(pot, n, 0, 1).value;
      const auto bm = beta_minus(pot, n, 0, 1).value;
      if (bp.is_zero() || bm.is_zero()) continue;
      CHECK(beta_imbalance(bp, bm) >= 1.0);
    }
  }
}

TEST_CASE("count feasibility is exactly divisibility by d") {
  for (long R = 1; R <= 4; ++R) {
    for (long S = 1; S <= 4; ++S) {
      const auto p = two_term(1, 1, R, S).params;
      for (long n = 1; n <= 20; ++n) {
        const bool divisible = n % std::gcd(R, S) == 0;
        CHECK(shells_feasible(p, n, WalkKind::X) == divisible);
        CHECK(shells_feasible(p, n, WalkKind::Y) == divisible);
        if (!divisible) CHECK(beta_plus(two_term(1, 1, R, S), n, 0, 3).value.is_zero());
      }
    }
  }
}

TEST_CASE("beta tables are byte-stable") {
  const PotentialSpec spec{two_term(1, 1, 1, 3).potential, two_term(1, 1, 1, 3).params};
  const std::vector<long> ns{5, 8, 11, 3, 6};
  std::ostringstream first;
  std::ostringstream second;
  write_beta_csv(first, beta_table(spec, ns, ExactScalar(Rational(1, 2)), ShellCaps{}));
  write_beta_csv(second, beta_table(spec, ns, ExactScalar(Rational(1, 2)), ShellCaps{}));
  CHECK(first.str() == second.str());
}
