#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sprforge/oracles.hpp"
#include "sprforge/segment.hpp"
#include "support/generators.hpp"

using namespace sprforge;
using Catch::Approx;

TEST_CASE("constant segment is stable") {
  SegmentFamily fam(Poly({1, 3, 3, 1}), Poly({1, 3, 3, 1}));
  auto v = segment_hurwitz(fam);
  REQUIRE(v.stable);
}

TEST_CASE("cubic pair (s+1)^3 / (s+2)^3 is segment stable") {
  SegmentFamily fam(Poly({1, 3, 3, 1}), Poly({1, 6, 12, 8}));
  REQUIRE(segment_hurwitz(fam).stable);
  auto mp = lambda_routh_positivity(fam);
  REQUIRE(mp.stable);
  // Delta_2(lambda) = 27 lambda^2 + 29 lambda + 8.
  const Poly& d2 = mp.minors[1];
  REQUIRE(d2.degree() == 2);
  REQUIRE(d2.coeff_of_power(2) == Approx(27.0).margin(1e-9));
  REQUIRE(d2.coeff_of_power(1) == Approx(29.0).margin(1e-9));
  REQUIRE(d2.coeff_of_power(0) == Approx(8.0).margin(1e-9));
}

TEST_CASE("frozen unstable fixture is refused with the lambda=1/2 witness") {
  auto fam = gen::frozen_unstable_fixture();
  REQUIRE(is_hurwitz(fam.a));
  REQUIRE(is_hurwitz(fam.b));
  auto v = segment_hurwitz(fam);
  REQUIRE_FALSE(v.stable);
  REQUIRE(v.witness_lambda.has_value());
  REQUIRE(*v.witness_lambda == Approx(0.5).margin(1e-6));
  REQUIRE(v.witness_root.has_value());
  REQUIRE(std::abs(v.witness_root->imag()) == Approx(1.0).margin(1e-6));
  REQUIRE(v.witness_root->real() == Approx(0.0).margin(1e-9));

  // Witness residual: the member at witness_lambda vanishes at the root.
  const Poly alam = segment_member(fam, *v.witness_lambda);
  const double resid = std::abs(alam.eval(*v.witness_root));
  REQUIRE(resid <= 1e-8 * alam.eval_abs(std::abs(*v.witness_root)));

  // The minor route sees it too.
  auto mp = lambda_routh_positivity(fam);
  REQUIRE_FALSE(mp.stable);
  REQUIRE(mp.failing_minor.has_value());

  // And the oracle.
  auto rep = oracles::lambda_grid_roots(fam, 1001);
  REQUIRE(rep.max_real_part >= -1e-9);
  REQUIRE(rep.at_lambda == Approx(0.5).margin(0.05));
}

TEST_CASE("unstable endpoints are reported as witness lambda 0 or 1") {
  Poly stable({1, 3, 3, 1});
  Poly unstable({1, 1, 1, 1});  // axis pair
  auto v0 = segment_hurwitz(SegmentFamily(unstable, stable));
  REQUIRE_FALSE(v0.stable);
  REQUIRE(*v0.witness_lambda == 0.0);
  REQUIRE(v0.witness_root.has_value());
  REQUIRE(v0.witness_root->real() >= -1e-9);
  auto v1 = segment_hurwitz(SegmentFamily(stable, unstable));
  REQUIRE_FALSE(v1.stable);
  REQUIRE(*v1.witness_lambda == 1.0);
}

TEST_CASE("input validation") {
  REQUIRE_THROWS_AS(SegmentFamily(Poly({1, 1}), Poly({1, 1, 1})), std::invalid_argument);
  REQUIRE_THROWS_AS(SegmentFamily(Poly({2, 1}), Poly({1, 1})), std::invalid_argument);
  REQUIRE_THROWS_AS(SegmentFamily(Poly(), Poly({1, 1})), std::invalid_argument);
}

TEST_CASE("a==b minors are constants in lambda") {
  Poly a({1, 3, 3, 1});
  auto mp = lambda_routh_positivity(SegmentFamily(a, a));
  REQUIRE(mp.stable);
  for (const Poly& m : mp.minors) REQUIRE(m.degree() <= 0);
}

TEST_CASE("three-way method agreement on random families") {
  std::mt19937_64 rng(31);
  int unstable_count = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 2 + rep % 7;  // degrees 2..8
    const Poly a = gen::random_hurwitz(rng, n);
    const Poly b = gen::random_hurwitz(rng, n);
    SegmentFamily fam(a, b);
    const auto exact = segment_hurwitz(fam);
    const auto minors = lambda_routh_positivity(fam);
    const auto grid = oracles::lambda_grid_roots(fam, 2001);
    if (std::abs(grid.max_real_part) <= 1e-9) continue;  // margin band
    const bool oracle_stable = grid.max_real_part < 0;
    INFO("n=" << n << " rep=" << rep << " oracle max Re=" << grid.max_real_part);
    REQUIRE(exact.stable == oracle_stable);
    REQUIRE(minors.stable == oracle_stable);
    if (!oracle_stable) ++unstable_count;
  }
  REQUIRE(unstable_count >= 3);  // the corpus must actually exercise refusals
}

TEST_CASE("constructed unstable families are detected with valid witnesses") {
  std::mt19937_64 rng(37);
  int made = 0;
  for (int rep = 0; rep < 40 && made < 12; ++rep) {
    auto fam = gen::make_unstable_family(rng, 4 + rep % 3);
    if (!fam) continue;
    ++made;
    auto v = segment_hurwitz(*fam);
    REQUIRE_FALSE(v.stable);
    REQUIRE(v.witness_lambda.has_value());
    REQUIRE(v.witness_root.has_value());
    const Poly alam = segment_member(*fam, *v.witness_lambda);
    const double resid = std::abs(alam.eval(*v.witness_root));
    REQUIRE(resid <= 1e-8 * std::max(1.0, alam.eval_abs(std::abs(*v.witness_root))));
    auto mp = lambda_routh_positivity(*fam);
    REQUIRE_FALSE(mp.stable);
  }
  REQUIRE(made >= 12);
}

TEST_CASE("lambda_routh_positivity guards high degrees") {
  std::mt19937_64 rng(41);
  const Poly a = gen::random_hurwitz(rng, 13);
  const Poly b = gen::random_hurwitz(rng, 13);
  REQUIRE_THROWS_AS(lambda_routh_positivity(SegmentFamily(a, b)), std::invalid_argument);
}
