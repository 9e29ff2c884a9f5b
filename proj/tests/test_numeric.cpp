#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <utility>
#include <vector>

#include "modschwarz/numeric.hpp"

using namespace modschwarz;
using C = std::complex<double>;

namespace {

double rel(const C& a, const C& b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("to_real", "[numeric]") {
  CHECK(to_real<double>(rational(1, 3)) == 1.0 / 3.0);
  CHECK(to_real<long double>(rational(1, 3)) == Catch::Approx(1.0L / 3.0L).epsilon(1e-18));
  CHECK(std::abs(to_real<long double>(rational(1, 3)) - 1.0L / 3.0L) < 1e-18L);
}

TEST_CASE("eval_qseries", "[numeric]") {
  const C i{0, 1};
  CHECK(eval_qseries(PuiseuxSeries::monomial(0, 1, 5), C{0.3, 0.7}, 5) == C{1, 0});

  const double half = std::abs(eval_qseries(PuiseuxSeries::monomial(rational(1, 2), 1, 3), i, 3) -
                               C{std::exp(-std::numbers::pi), 0});
  CHECK(half < 1e-16);

  const QSeries d = delta(40);
  const C at10 = eval_qseries(d, i, 10);
  const C at40 = eval_qseries(d, i, 40);
  CHECK(rel(at10, at40) < 1e-15);
  // Leading terms q(1 - 24q); the first omitted term is 252 q^3 ~ 8.8e-4 q.
  const double q = std::exp(-2 * std::numbers::pi);
  CHECK(std::abs(at40.real() - q * (1 - 24 * q)) < 1e-3 * q);
  CHECK(std::abs(at40.imag()) < 1e-18);

  CHECK_THROWS_AS(eval_qseries(d, C{0.5, 0.0}, 10), Error);
  CHECK_THROWS_AS(eval_qseries(d, C{0.5, -1.0}, 10), Error);
}

TEST_CASE("eval_j_inverse lands on j(i) = 1728", "[numeric]") {
  const auto j = eval_j_inverse(C{0, 1}, 60);
  CHECK(std::abs(j.z - C{1, 0}) < 1e-10);
}

TEST_CASE("eval_h_hypergeometric", "[numeric]") {
  SECTION("cusp limit") {
    const C h = eval_h_hypergeometric(7, 1, C{0, 400}, 20);
    CHECK(std::abs(h) < 1e-100);
  }
  SECTION("outside the disk") {
    try {
      eval_h_hypergeometric(7, 1, C{0, 0.05}, 60);
      FAIL("expected OutsideDisk");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OutsideDisk);
    }
    CHECK_THROWS_AS(eval_h_hypergeometric(7, 1, C{0, 1}, 60), Error);  // |z| = 1 exactly
  }
}

TEST_CASE("cross_check", "[numeric]") {
  const EvalReport<double> r = cross_check(7, 1, C{0, 2}, 60);
  CHECK(r.rel_error < 1e-10);
  CHECK(r.terms_used == 60);
  CHECK(r.tail_bound >= 0);
  CHECK(r.tail_bound < 1e-100);

  const EvalReport<double> off = cross_check(7, 1, C{0.3, 1.5}, 60);
  CHECK(std::isfinite(off.rel_error));
  CHECK(off.rel_error < 1e-9);

  // |1728/j(0.3 + 1.2i)| = 1.0176, outside the disk where F converges.
  const auto z = eval_j_inverse(C{0.3, 1.2}, 60).z;
  CHECK(std::abs(z) == Catch::Approx(1.017565246).epsilon(1e-8));
  CHECK_THROWS_AS(cross_check(7, 1, C{0.3, 1.2}, 60), Error);

  try {
    cross_check(7, 9, C{0, 2}, 60);
    FAIL("expected ClosedFormRequiresReducedN");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ClosedFormRequiresReducedN);
  }
}

TEST_CASE("phase equivariance", "[numeric][property]") {
  for (const auto& [m, n] : std::vector<std::pair<long, long>>{{7, 1}, {8, 3}, {7, 9}}) {
    const SolutionBundle sol = solve(m, n, 40);
    const C phase = std::polar(1.0, 2 * std::numbers::pi * n / m);
    for (const C tau : {C{0, 1.5}, C{0.3, 1.7}, C{-0.45, 2.0}}) {
      const C h0 = eval_qseries(sol.h, tau, 40);
      const C h1 = eval_qseries(sol.h, tau + 1.0, 40);
      CHECK(std::abs(h1 - phase * h0) / std::abs(h0) < 1e-8);
    }
    if (n < m) {
      const C tau{0.2, 1.5};
      const C g0 = eval_h_hypergeometric(m, n, tau, 40);
      const C g1 = eval_h_hypergeometric(m, n, tau + 1.0, 40);
      CHECK(std::abs(g1 - phase * g0) / std::abs(g0) < 1e-8);
    }
  }
}

TEST_CASE("doubling N does not increase the cross-check error", "[numeric][property]") {
  constexpr double kNoiseFloor = 1e-13;
  for (const auto& [m, n] : std::vector<std::pair<long, long>>{{7, 1}, {8, 3}, {9, 2}}) {
    for (const C tau : {C{0, 1.2}, C{0.25, 1.4}}) {
      double previous = cross_check(m, n, tau, 4).rel_error;
      for (std::size_t terms = 8; terms <= 32; terms *= 2) {
        const double current = cross_check(m, n, tau, terms).rel_error;
        INFO("m=" << m << " n=" << n << " tau=" << tau << " terms=" << terms);
        CHECK(current <= std::max(previous, kNoiseFloor));
        previous = current;
      }
    }
  }
}

TEST_CASE("determinism and extended precision", "[numeric]") {
  const auto a = cross_check(9, 2, C{0.3, 1.5}, 30);
  const auto b = cross_check(9, 2, C{0.3, 1.5}, 30);
  CHECK(a.via_series == b.via_series);
  CHECK(a.via_hypergeom == b.via_hypergeom);

  const auto wide = cross_check(9, 2, std::complex<long double>{0.3L, 1.5L}, 60);
  CHECK(wide.rel_error < 1e-12L);
}
