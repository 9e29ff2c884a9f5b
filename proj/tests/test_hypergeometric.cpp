#include <catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include "modschwarz/hypergeometric.hpp"
#include "test_support.hpp"

using namespace modschwarz;

namespace {

// (x)_n (y)_n / ((c)_n n!) straight from the Pochhammer definition.
Rational pochhammer_term(const HypergeomParams& p, unsigned n) {
  Rational num = 1, den = 1;
  for (unsigned i = 0; i < n; ++i) {
    const Rational k(i);
    num *= (p.a + k) * (p.b + k);
    den *= (p.c + k) * (k + 1);
  }
  return num / den;
}

const std::vector<std::pair<long, long>> kGrid = {{7, 1}, {7, 2}, {7, 3}, {8, 3}, {9, 2}, {11, 5}, {12, 5}};

}  // namespace

TEST_CASE("hypergeom_coeffs", "[hypergeometric]") {
  const HypergeomParams p{rational(13, 84), rational(41, 84), rational(8, 7)};
  const QSeries f = hypergeom_coeffs(p, 6);
  CHECK(f[0] == 1);
  CHECK(f[1] == rational(533, 8064));
  for (unsigned n = 0; n < 6; ++n) CHECK(f[n] == pochhammer_term(p, n));

  CHECK(hypergeom_coeffs({1, 1, 1}, 8) == QSeries(std::vector<Rational>(8, Rational(1))));

  SECTION("symmetric in a and b") {
    const HypergeomParams q{rational(41, 84), rational(13, 84), rational(8, 7)};
    CHECK(hypergeom_coeffs(q, 10) == hypergeom_coeffs(p, 10));
  }
  SECTION("invalid c") {
    try {
      hypergeom_coeffs({1, 1, -2}, 6);
      FAIL("expected InvalidC");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidC);
    }
    CHECK_THROWS_AS(hypergeom_coeffs({1, 1, 0}, 2), Error);
    // c = -3 is only hit by the recurrence from order 5 on.
    CHECK_NOTHROW(hypergeom_coeffs({1, 1, -3}, 4));
  }
}

TEST_CASE("component recipes", "[hypergeometric]") {
  const ComponentRecipe first = ComponentRecipe::make(7, 1, Component::First);
  CHECK(first.outer_power == rational(1, 14) + rational(1, 12));
  CHECK(first.params.a == rational(13, 84));
  CHECK(first.params.b == rational(41, 84));
  CHECK(first.params.c == rational(8, 7));
  const ComponentRecipe second = ComponentRecipe::make(7, 1, Component::Second);
  CHECK(second.params.c == rational(6, 7));
  CHECK(second.outer_power == rational(1, 12) - rational(1, 14));
  CHECK_THROWS_AS(ComponentRecipe::make(6, 1, Component::First), Error);
  CHECK_THROWS_AS(ComponentRecipe::make(8, 2, Component::First), Error);
}

TEST_CASE("component_series", "[hypergeometric]") {
  const std::size_t n = 12;
  CHECK(component_series(ComponentRecipe::make(7, 1, Component::First), n).offset() == rational(4, 7));
  CHECK(component_series(ComponentRecipe::make(7, 1, Component::Second), n).offset() == rational(3, 7));
  CHECK(component_series(ComponentRecipe::make(7, 2, Component::First), n).body()[0] == 1);

  // Golden values from an independent fraction-arithmetic script.
  CHECK(component_series(ComponentRecipe::make(7, 2, Component::First), n).body()[1] == rational(-172, 21));
  CHECK(component_series(ComponentRecipe::make(7, 2, Component::Second), n).body()[1] == rational(-36, 7));

  for (const auto& [m, np] : kGrid) {
    const PuiseuxSeries a = component_series(ComponentRecipe::make(m, np, Component::First), n);
    const PuiseuxSeries b = component_series(ComponentRecipe::make(m, np, Component::Second), n);
    CHECK(a.offset() + b.offset() == 1);
    CHECK(a.order() == n);
    CHECK(b.body()[0] == 1);
  }
}

TEST_CASE("component_series flags an inconsistent recipe", "[hypergeometric]") {
  ComponentRecipe r = ComponentRecipe::make(7, 1, Component::First);
  r.eta_exponent = 12;
  try {
    component_series(r, 6);
    FAIL("expected RecipeInconsistent");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RecipeInconsistent);
  }
}
