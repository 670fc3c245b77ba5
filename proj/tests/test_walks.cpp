#include <doctest.h>

#include "hillwalk/walks.hpp"

using namespace hillwalk;

// Frozen values come from tests/oracles/walk_oracle.py.

TEST_CASE("shell count progression") {
  const auto p = two_term(1, 1, 1, 3).params;
  for (long k = 0; k < 3; ++k) {
    const auto c = shell_counts(p, 8, WalkKind::X, k);
    REQUIRE(c);
    CHECK(c->negative == 1 + 3 * k);
    CHECK(c->positive == 3 + k);
  }
  const auto y = shell_counts(p, 5, WalkKind::Y, 0);
  REQUIRE(y);
  CHECK(y->negative == 5);
  CHECK(y->positive == 0);
  const auto w = shell_counts(p, 5, WalkKind::W, 0);
  REQUIRE(w);
  CHECK(w->negative == 3);
  CHECK(w->positive == 1);
}

TEST_CASE("no shells when d does not divide n") {
  const auto p = two_term(1, ExactScalar::imaginary_unit(), 2, 2).params;
  CHECK(p.d == 2);
  CHECK_FALSE(shell_counts(p, 7, WalkKind::X, 0));
  CHECK_FALSE(shells_feasible(p, 7, WalkKind::Y));
  CHECK(shells_feasible(p, 8, WalkKind::X));
  CHECK(enumerate_shell(p, 7, WalkKind::X, 0).empty());
}

TEST_CASE("oracle: shell 0 at n = 5 for (1,1,1,3)") {
  const auto pot = two_term(1, 1, 1, 3);
  const auto walks = enumerate_shell(pot.params, 5, WalkKind::X, 0);
  REQUIRE(walks.size() == 3);
  CHECK(walks[0].steps == std::vector<long>{-2, 6, 6});
  CHECK(walks[1].steps == std::vector<long>{6, -2, 6});
  CHECK(walks[2].steps == std::vector<long>{6, 6, -2});
  CHECK(shell_sum(pot.params, 5, WalkKind::X, 0, 0) == ExactScalar(Rational(-1, 576)));
}

TEST_CASE("oracle: X shells at n = 8 for (1,1,1,3)") {
  const auto pot = two_term(1, 1, 1, 3);
  const std::size_t sizes[] = {4, 38, 200};
  const Rational values[] = {Rational(-1, 129600), make_rational(479, Integer("1545067560960000")),
                             make_rational(10779533, Integer("38484671358012751872000000"))};
  for (long k = 0; k < 3; ++k) {
    CAPTURE(k);
    const auto walks = enumerate_shell(pot.params, 8, WalkKind::X, k);
    CHECK(walks.size() == sizes[k]);
    ExactScalar sum;
    for (const auto& w : walks) sum += weight(w, pot.potential, 0);
    CHECK(sum == ExactScalar(values[k]));
    CHECK(shell_sum(pot.params, 8, WalkKind::X, k, 0) == ExactScalar(values[k]));
    CHECK(ExactScalar(static_cast<long>(walks.size())).re() <=
          shell_size_bound(pot.params, 8, WalkKind::X, k).re());
  }
}

TEST_CASE("oracle: straight walk at n = 6") {
  const auto pot = two_term(1, 1, 1, 3);
  const auto walks = enumerate_shell(pot.params, 6, WalkKind::X, 0);
  REQUIRE(walks.size() == 1);
  CHECK(walks[0].steps == std::vector<long>{6, 6});
  CHECK(weight(walks[0], pot.potential, 0) == ExactScalar(Rational(1, 36)));
}

TEST_CASE("vertices and admissibility") {
  Walk w{{-2, 6, 6}, WalkKind::X, 5};
  CHECK(vertices(w) == std::vector<long>{-5, -7, -1, 5});
  CHECK(is_admissible(w));
  Walk through{{10, -2, 2}, WalkKind::X, 5};  // visits +5 before the end
  CHECK_FALSE(is_admissible(through));
  Walk wrong{{6, 6}, WalkKind::X, 5};
  CHECK_FALSE(is_admissible(wrong));
}

TEST_CASE("singular vertex names n and t") {
  Walk w{{-2, 6, 6}, WalkKind::X, 5};
  // Vertex t = 1 is −7: 25 − 49 + z = 0 at z = 24.
  try {
    vertex_product(w, 24);
    FAIL("expected a singularity");
  } catch (const SingularityError& e) {
    CHECK(e.n() == 5);
    CHECK(e.t() == 1);
    CHECK(e.vertex() == -7);
  }
}

TEST_CASE("capped sum agrees with enumeration for a three-term potential") {
  const FourierPotential pot({{-2, ExactScalar(1)},
                              {2, ExactScalar::imaginary_unit()},
                              {4, ExactScalar(Rational(1, 2))}});
  const ExactScalar z(Rational(1, 3), Rational(-1, 5));
  for (long n = 1; n <= 5; ++n) {
    for (const WalkKind kind : {WalkKind::X, WalkKind::Y, WalkKind::W}) {
      CAPTURE(n);
      ExactScalar listed;
      for (const auto& w : enumerate_capped(pot, n, kind, 6)) listed += weight(w, pot, z);
      CHECK(capped_sum(pot, n, kind, 6, z) == listed);
    }
  }
}
