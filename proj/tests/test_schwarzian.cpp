#include <catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include "modschwarz/schwarzian.hpp"
#include "test_support.hpp"

using namespace modschwarz;
using modschwarz::testing::ints;

namespace {

const std::vector<std::pair<long, long>> kGrid = {{7, 1}, {7, 2}, {7, 6}, {8, 3}, {9, 2}, {7, 9}, {7, 16}, {11, 13}};

// {h} straight from the definition with ' = q d/dq applied to Puiseux terms,
// written without the library's Puiseux division: for h = q^s u,
// h' = q^s (s u + Du), h'' = q^s (s^2 u + 2 s Du + D^2 u).
QSeries schwarzian_oracle(const Rational& s, const QSeries& u) {
  const QSeries du = derive(u), d2u = derive(du);
  const QSeries h1 = s * u + du;
  const QSeries h2 = (s * s) * u + (2 * s) * du + d2u;
  const QSeries r = divide(h2, h1);
  return derive(r) - rational(1, 2) * (r * r);
}

}  // namespace

TEST_CASE("schwarz_derivative", "[schwarzian]") {
  SECTION("monomial") {
    const Rational s = rational(3, 5);
    const QSeries sd = schwarz_derivative(PuiseuxSeries::monomial(s, 1, 6));
    CHECK(sd == QSeries::constant(-s * s / 2, 6));
  }
  SECTION("q^{1/7}(1+q)") {
    const PuiseuxSeries h(rational(1, 7), ints({1, 1, 0, 0}));
    const QSeries sd = schwarz_derivative(h);
    CHECK(sd[0] == rational(-1, 98));
    CHECK(sd == schwarzian_oracle(rational(1, 7), ints({1, 1, 0, 0})));
    // By hand: r = h''/h' = (1/7)(1 + 64q)/(1 + 8q) = 1/7 + 8q + O(q^2),
    // so {h}_1 = 1*8 - (1/2)(2 * 1/7 * 8) = 48/7.
    CHECK(sd[1] == rational(48, 7));
  }
  SECTION("Mobius invariance") {
    const PuiseuxSeries h(Rational(1), ints({1, 3, -1, 2, 5, 0, 1}));
    const QSeries base = schwarz_derivative(h);
    CHECK(schwarz_derivative(rational(5, 3) * h) == base);
    CHECK(schwarz_derivative(PuiseuxSeries::monomial(0, 1, 7) / h) == base);
    CHECK(schwarz_derivative(h + PuiseuxSeries::monomial(0, rational(2, 9), 7)) == base);
    CHECK(schwarz_derivative(rational(-4, 7) * h + PuiseuxSeries::monomial(0, 3, 7)) == base);
  }
  SECTION("degenerate") {
    try {
      schwarz_derivative(PuiseuxSeries::monomial(0, 1, 5));
      FAIL("expected DegenerateDerivative");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateDerivative);
    }
  }
}

TEST_CASE("verify_proportionality", "[schwarzian]") {
  const QSeries e4 = eisenstein(4, 10);
  CHECK(verify_proportionality(rational(-1, 2) * e4, 10) == rational(-1, 2));
  CHECK(verify_proportionality(e4, 10) == 1);
  try {
    verify_proportionality(ints({1, 240, 2161}), 3);
    FAIL("expected NotProportional");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotProportional);
    CHECK(e.index() == std::optional<std::size_t>(2));
  }
  CHECK_THROWS_AS(verify_proportionality(e4.truncated(5), 10), Error);
}

TEST_CASE("solve", "[schwarzian]") {
  const SolutionBundle s71 = solve(7, 1, 40);
  CHECK(s71.h.offset() == rational(1, 7));
  CHECK(s71.h.body()[0] == 1);
  CHECK(s71.h.order() == 40);
  CHECK(s71.schwarz_constant == rational(-1, 98));
  CHECK(s71.ode_parameter == rational(-1, 196));
  CHECK(schwarz_derivative(s71.h) == schwarzian_oracle(s71.h.offset(), s71.h.body()));

  const SolutionBundle s79 = solve(7, 9, 40);
  CHECK(s79.n_prime == 2);
  CHECK(s79.r == 1);
  CHECK(s79.form.weight == 11);
  CHECK(s79.h.offset() == rational(9, 7));
  CHECK(s79.h.order() == 40);
  REQUIRE(s79.levels.size() == 2);
  CHECK(s79.levels[1].second_leading == rational(24, 19));

  SECTION("invalid parameters") {
    for (const auto& [m, n] : std::vector<std::pair<long, long>>{{6, 1}, {7, 14}, {8, 2}, {7, 0}}) {
      try {
        solve(m, n, 10);
        FAIL("expected InvalidParameters");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidParameters);
      }
    }
  }
}

TEST_CASE("solve grid invariants", "[schwarzian]") {
  for (const auto& [m, n] : kGrid) {
    INFO("m=" << m << " n=" << n);
    const SolutionBundle sol = solve(m, n, 40);
    CHECK(sol.schwarz_constant == -rational(1, 2) * rational(n, m) * rational(n, m));
    CHECK(sol.h.offset() == rational(n, m));
    for (std::size_t i = 0; i < sol.levels.size(); ++i) {
      CHECK(sol.levels[i].wronskian.exponent == static_cast<long>(i) + 1);
      CHECK(sgn(sol.levels[i].wronskian.constant) != 0);
    }
    const QSeries sd = schwarz_derivative(sol.h);
    CHECK(schwarz_derivative(PuiseuxSeries::monomial(0, 1, 40) / sol.h) == sd);
  }
}

TEST_CASE("ode_solutions and verify_ode", "[schwarzian]") {
  SECTION("monomial") {
    const Rational s = rational(2, 7);
    const auto [y1, y2] = ode_solutions(PuiseuxSeries::monomial(s, 1, 6));
    CHECK(y1.offset() == s / 2);
    CHECK(y2.offset() == -s / 2);
  }
  SECTION("monomial test hook with E4 replaced by 1") {
    const Rational sigma = rational(3, 4);
    const PuiseuxSeries y = PuiseuxSeries::monomial(sigma, 1, 5);
    const QSeries one = QSeries::constant(1, 5);
    CHECK(verify_ode(y, -sigma * sigma, 5, one));
    CHECK(ode_residual_index(y, rational(1, 2), 5, one) == std::optional<std::size_t>(0));
    CHECK_THROWS_AS(verify_ode(y, rational(1, 2), 5, one), Error);
    CHECK(verify_ode(PuiseuxSeries(rational(1, 3), QSeries(5)), rational(7, 3), 5, one));
  }
  SECTION("from solve(7,1)") {
    const SolutionBundle sol = solve(7, 1, 40);
    const auto [y1, y2] = ode_solutions(sol.h);
    CHECK(y1.offset() == rational(1, 14));
    CHECK(y2.offset() == rational(-1, 14));
    CHECK(verify_ode(y1, rational(-1, 196), 40));
    CHECK(verify_ode(y2, rational(-1, 196), 40));
    CHECK(y1 / y2 == sol.h);
    // W(y1, y2) = h' y2^2 = offset(h) with the dropped scalar.
    const PuiseuxSeries w = derive(y1) * y2 - y1 * derive(y2);
    CHECK(w.offset() == 0);
    CHECK(w.body() == QSeries::constant(rational(1, 7), w.order()));
    try {
      verify_ode(y1, rational(-1, 98), 40);
      FAIL("expected OdeResidualNonzero");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OdeResidualNonzero);
      CHECK(e.index() == std::optional<std::size_t>(0));
    }
  }
}

TEST_CASE("seeded faults are caught early", "[schwarzian]") {
  using Target = SeededFault::Target;
  for (const Target t : {Target::E4, Target::Eta24, Target::FirstComponent, Target::SecondComponent}) {
    for (std::size_t i = 0; i < 5; ++i) {
      INFO("target=" << to_string(t) << " index=" << i);
      try {
        solve(7, 1, 40, SolveOptions{SeededFault{t, i}});
        FAIL("fault went undetected");
      } catch (const Error& e) {
        REQUIRE(e.index().has_value());
        CHECK(*e.index() <= 5);
      }
    }
  }
}
