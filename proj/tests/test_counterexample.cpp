#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "gwline/counterexample.hpp"
#include "gwline/objectives.hpp"
#include "test_support.hpp"

using namespace gwline;

TEST_CASE("counterexample spec validates its parameter box") {
  const CounterexampleSpec spec(6, 1.0, 0.1);
  CHECK(spec.n == 6);
  CHECK(spec.alpha == 1.0);
  CHECK(spec.epsilon == 0.1);

  CHECK(CounterexampleSpec::epsilon_bound(4) == 2.0);
  CHECK(CounterexampleSpec::epsilon_bound(5) == 1.0);
  CHECK(CounterexampleSpec::epsilon_bound(7) == 0.5);

  CHECK_THROWS_AS(CounterexampleSpec(3, 1.0, 0.1), validation_error);
  CHECK_THROWS_AS(CounterexampleSpec(6, 0.0, 0.1), validation_error);
  CHECK_THROWS_AS(CounterexampleSpec(6, 1.0, 0.0), validation_error);   // open interval
  CHECK_THROWS_AS(CounterexampleSpec(6, 1.0, 2.0 / 3.0), validation_error);
  CHECK_THROWS_AS(CounterexampleSpec(6, 1.0, -0.1), validation_error);
}

TEST_CASE("proposition regime flag: n > 2 + 2^alpha") {
  CHECK(CounterexampleSpec(5, 1.0, 0.1).in_proposition_regime());
  CHECK_FALSE(CounterexampleSpec(4, 1.0, 0.1).in_proposition_regime());
  CHECK(CounterexampleSpec(7, 2.0, 0.1).in_proposition_regime());
  CHECK_FALSE(CounterexampleSpec(6, 2.0, 0.1).in_proposition_regime()); // 6 = 2 + 2^2 exactly
}

TEST_CASE("instance construction: frozen coordinates") {
  {
    const auto [x, y] = construct_instance(CounterexampleSpec(5, 1.0, 0.5));
    CHECK(x.points() == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
    CHECK(y.points() == std::vector<double>{-1.0, -0.5, 0.5, 1.0, 1.5});
  }
  {
    const auto [x, y] = construct_instance(CounterexampleSpec(4, 1.0, 1.0));
    CHECK(x.points() == std::vector<double>{-1.0, -0.5, 0.5, 1.0});
    CHECK(y.points() == std::vector<double>{-1.0, 0.0, 1.0, 2.0});
  }
}

TEST_CASE("constructed x is antisymmetric for any valid spec") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 4 + static_cast<std::size_t>(rng() % 9);
    std::uniform_real_distribution<double> u(0.05, 0.95);
    const double epsilon = u(rng) * CounterexampleSpec::epsilon_bound(n);
    const auto [x, y] = construct_instance(CounterexampleSpec(n, 1.0, epsilon));
    REQUIRE(x.size() == n);
    REQUIRE(y.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
      // (2i-n-1) and (2(n+1-i)-n-1) are exact negations, so this is exact.
      CHECK(x[i] + x[n - 1 - i] == 0.0);
    }
  }
}

TEST_CASE("closed forms at the degenerate point") {
  // f_id(0) = 2^alpha + (n-2).
  CHECK(f_id_closed_form(7, 1.0, 0.0) == doctest::Approx(7.0).epsilon(1e-14));
  CHECK(f_id_closed_form(4, 2.0, 0.0) == doctest::Approx(6.0).epsilon(1e-14));
  // f_cyc(0) = 2(n-2), independent of alpha.
  CHECK(f_cyc_closed_form(7, 1.0, 0.0) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(f_cyc_closed_form(7, 0.5, 0.0) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(f_cyc_closed_form(7, 2.0, 0.0) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(f_cyc_closed_form(4, 1.0, 0.0) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("closed forms validate their parameters") {
  CHECK_THROWS_AS(f_id_closed_form(3, 1.0, 0.1), validation_error);
  CHECK_THROWS_AS(f_id_closed_form(6, -1.0, 0.1), validation_error);
  CHECK_THROWS_AS(f_id_closed_form(6, 1.0, -0.1), validation_error);
  CHECK_THROWS_AS(f_id_closed_form(6, 1.0, 2.0 / 3.0), validation_error); // at the bound
  CHECK_THROWS_AS(f_cyc_closed_form(3, 1.0, 0.1), validation_error);
  CHECK_NOTHROW(f_id_closed_form(6, 1.0, 0.0)); // epsilon = 0 is evaluable here
  CHECK_NOTHROW(f_cyc_closed_form(6, 1.0, 0.0));
}

TEST_CASE("closed forms match direct evaluation of the constructed instance") {
  {
    const auto [x, y] = construct_instance(CounterexampleSpec(6, 1.0, 0.1));
    const double direct_id = assignment_objective(x, y, Permutation::identity(6), CostParams(1.0));
    const double direct_cyc = assignment_objective(x, y, Permutation::cyclic(6), CostParams(1.0));
    CHECK(gwtest::close(f_id_closed_form(6, 1.0, 0.1), direct_id, 1e-9));
    CHECK(gwtest::close(f_cyc_closed_form(6, 1.0, 0.1), direct_cyc, 1e-9));
  }

  std::mt19937_64 rng(71);
  const double alphas[] = {0.5, 1.0, 1.5, 2.0};
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + static_cast<std::size_t>(rng() % 7);
    const double alpha = alphas[trial % 4];
    std::uniform_real_distribution<double> u(0.02, 0.98);
    const double epsilon = u(rng) * CounterexampleSpec::epsilon_bound(n);
    const auto [x, y] = construct_instance(CounterexampleSpec(n, alpha, epsilon));
    const CostParams cost(alpha);
    CHECK(gwtest::close(f_id_closed_form(n, alpha, epsilon),
                        assignment_objective(x, y, Permutation::identity(n), cost), 1e-9));
    CHECK(gwtest::close(f_cyc_closed_form(n, alpha, epsilon),
                        assignment_objective(x, y, Permutation::cyclic(n), cost), 1e-9));
  }
}

TEST_CASE("closed forms are continuous at epsilon = 0") {
  // Both forms contain terms of order epsilon^alpha, so the jump across
  // [0, 1e-6] scales like 1e-6^alpha: far below 1e-3 once alpha >= 1, but
  // only about 1e-3 * sum_j j^0.5 (~1.5e-2 at n = 10) when alpha = 0.5.
  for (std::size_t n = 4; n <= 10; ++n) {
    for (const double alpha : {1.0, 1.5, 2.0}) {
      CHECK(std::abs(f_id_closed_form(n, alpha, 1e-6) - f_id_closed_form(n, alpha, 0.0)) <= 1e-3);
      CHECK(std::abs(f_cyc_closed_form(n, alpha, 1e-6) - f_cyc_closed_form(n, alpha, 0.0)) <= 1e-3);
    }
    CHECK(std::abs(f_id_closed_form(n, 0.5, 1e-6) - f_id_closed_form(n, 0.5, 0.0)) <= 5e-2);
    CHECK(std::abs(f_cyc_closed_form(n, 0.5, 1e-6) - f_cyc_closed_form(n, 0.5, 0.0)) <= 5e-2);
  }
  // The alpha = 0.5 jump genuinely exceeds 1e-3; a uniform 1e-3 bound over
  // alpha >= 0.5 is not attainable for these formulas.
  CHECK(std::abs(f_id_closed_form(10, 0.5, 1e-6) - f_id_closed_form(10, 0.5, 0.0)) > 1e-3);
}

TEST_CASE("degenerate gap formula and sign") {
  CHECK(degenerate_gap(7, 1.0) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(degenerate_gap(4, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(degenerate_gap(10, 2.0) == doctest::Approx(4.0).epsilon(1e-14));

  for (std::size_t n = 4; n <= 12; ++n) {
    for (const double alpha : {0.5, 1.0, 2.0}) {
      const double gap = degenerate_gap(n, alpha);
      CHECK(gwtest::close(gap, f_cyc_closed_form(n, alpha, 0.0) - f_id_closed_form(n, alpha, 0.0),
                          1e-12));
      const bool in_regime = static_cast<double>(n) > 2.0 + std::pow(2.0, alpha);
      CHECK((gap > 0.0) == in_regime);
    }
  }
}

TEST_CASE("degenerate gap grows by one per added point") {
  for (std::size_t n = 4; n <= 11; ++n) {
    for (const double alpha : {0.5, 1.0, 2.0}) {
      CHECK(degenerate_gap(n + 1, alpha) - degenerate_gap(n, alpha) ==
            doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("witness search finds an epsilon with positive margin") {
  for (const auto& [n, alpha] : std::vector<std::pair<std::size_t, double>>{
           {5, 1.0}, {6, 1.0}, {7, 1.0}, {7, 2.0}}) {
    const auto witness = find_witness_epsilon(n, alpha);
    CHECK(witness.epsilon > 0.0);
    CHECK(witness.epsilon < CounterexampleSpec::epsilon_bound(n));
    CHECK(witness.margin > 1e-9);
    CHECK(gwtest::close(witness.margin,
                        f_cyc_closed_form(n, alpha, witness.epsilon) -
                            f_id_closed_form(n, alpha, witness.epsilon),
                        1e-12));
  }
}

TEST_CASE("witness search reports failure outside the regime") {
  try {
    find_witness_epsilon(4, 1.0); // gap (4-2) - 2^1 = 0: no margin to find
    FAIL("expected a witness search error");
  } catch (const witness_search_error& e) {
    CHECK(e.degenerate_gap() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_FALSE(e.in_regime());
  }
  CHECK_THROWS_AS(find_witness_epsilon(5, 2.0), witness_search_error); // 5 < 2 + 4
}

TEST_CASE("proposition verification succeeds inside the regime") {
  const auto record = verify_proposition(6, 1.0);
  CHECK(record.n == 6);
  CHECK(record.holds());
  CHECK(record.baselines_tie);
  CHECK(record.max_exceeds_baselines);
  CHECK(record.max_at_least_f_cyc);
  CHECK(record.cyc_is_maximizer);
  CHECK(gwtest::close(record.f_id, record.f_a_id, 1e-12));
  CHECK(record.solve.best_value > record.f_id + 1e-6);
  CHECK(record.gap_at_zero == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(gwtest::close(record.f_id, record.f_id_closed, 1e-9));
  CHECK(gwtest::close(record.f_cyc, record.f_cyc_closed, 1e-9));
}

TEST_CASE("proposition verification honors a caller-chosen epsilon") {
  const auto record = verify_proposition(6, 1.0, 0.05);
  CHECK(record.epsilon == 0.05);
  CHECK(record.holds());
  CHECK(record.margin > 0.0);

  // n = 4, alpha = 1 sits outside the regime: the baselines still tie, but
  // nothing beats them, so the verdict is an honest failure.
  const auto boundary = verify_proposition(4, 1.0, 0.5);
  CHECK(boundary.baselines_tie);
  CHECK_FALSE(boundary.max_exceeds_baselines);
  CHECK_FALSE(boundary.holds());

  CHECK_THROWS_AS(verify_proposition(3, 1.0, 0.1), validation_error);
  CHECK_THROWS_AS(verify_proposition(6, 1.0, 0.7), validation_error); // over the bound
}
