#pragma once

// Gauss 2F1 coefficient lists and the two hypergeometric components of the
// minimal-weight vector-valued form attached to diagonal exponents
// ((m + n')/2m, (m - n')/2m).

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "modschwarz/error.hpp"
#include "modschwarz/modular_forms.hpp"
#include "modschwarz/puiseux.hpp"
#include "modschwarz/qseries.hpp"
#include "modschwarz/rational.hpp"

namespace modschwarz {

struct HypergeomParams {
  Rational a, b, c;
};

/// Coefficients of F(a, b; c; z) up to z^{order-1}, from
/// t_{n+1} = t_n (a+n)(b+n) / ((c+n)(n+1)).
inline QSeries hypergeom_coeffs(const HypergeomParams& p, std::size_t order) {
  if (is_integer(p.c) && sgn(p.c) <= 0 && p.c > -Rational(static_cast<unsigned long>(order)) + 1)
    throw Error(ErrorKind::InvalidC, "c = " + to_string(p.c) + " is a non-positive integer");
  std::vector<Rational> t(order);
  if (order == 0) return QSeries(std::move(t));
  t[0] = 1;
  for (std::size_t n = 0; n + 1 < order; ++n) {
    const Rational k(static_cast<unsigned long>(n));
    t[n + 1] = t[n] * (p.a + k) * (p.b + k) / ((p.c + k) * (k + 1));
  }
  return QSeries(std::move(t));
}

enum class Component { First, Second };

/// eta^{eta_exponent} (1728/j)^{outer_power} F(params; 1728/j) for one
/// component; the second component is the first with n' replaced by -n'.
struct ComponentRecipe {
  long m = 0;
  long n_prime = 0;
  Component component = Component::First;
  int eta_exponent = 10;
  Rational outer_power;
  HypergeomParams params;

  static ComponentRecipe make(long m, long n_prime, Component component) {
    if (m < 7 || n_prime <= 0 || n_prime >= m || std::gcd(m, n_prime) != 1)
      throw Error(ErrorKind::InvalidParameters, "recipe needs m >= 7, 0 < n' < m, gcd(m, n') = 1; got m=" +
                                                    std::to_string(m) + ", n'=" + std::to_string(n_prime));
    const long signed_n = component == Component::First ? n_prime : -n_prime;
    const Rational half_gap = rational(signed_n, 2 * m);
    ComponentRecipe r;
    r.m = m;
    r.n_prime = n_prime;
    r.component = component;
    r.outer_power = half_gap + rational(1, 12);
    r.params = {half_gap + rational(1, 12), half_gap + rational(5, 12), 2 * half_gap + 1};
    return r;
  }

  /// Exponent the assembled component must start with: (m +- n')/2m.
  Rational expected_offset() const {
    return component == Component::First ? rational(m + n_prime, 2 * m) : rational(m - n_prime, 2 * m);
  }
};

/// Assembles one component from the basis' 1728/j. Offset is
/// eta_exponent/24 + outer_power; body is normalized to constant term 1 by
/// dropping 1728^{outer_power}.
inline PuiseuxSeries component_series(const ComponentRecipe& r, const ModularBasis& basis) {
  const std::size_t order = basis.order;
  const QSeries eta_body = eta_power(r.eta_exponent, order).body();
  // 1728/j = 1728 q * unit with unit = eta^24-body / E4^3, unit(0) = 1.
  const QSeries unit = divide(basis.eta24_body, pow(basis.e4, 3UL));
  if (unit.order() == 0 || unit[0] != 1)
    throw Error(ErrorKind::RecipeInconsistent, "1728/j does not start with 1728 q", 1);
  const QSeries outer = pow(unit, r.outer_power);
  const QSeries hyp = compose(hypergeom_coeffs(r.params, order), basis.j_inverse);
  QSeries body = eta_body * outer * hyp;

  const Rational offset = rational(r.eta_exponent, 24) + r.outer_power;
  if (offset != r.expected_offset())
    throw Error(ErrorKind::RecipeInconsistent,
                "offset " + to_string(offset) + " differs from " + to_string(r.expected_offset()), 0);
  if (body.order() == 0 || body[0] != 1)
    throw Error(ErrorKind::RecipeInconsistent, "component body does not start with 1", 0);

  if (const auto& f = basis.fault) {
    const bool hit = (f->target == SeededFault::Target::FirstComponent && r.component == Component::First) ||
                     (f->target == SeededFault::Target::SecondComponent && r.component == Component::Second);
    if (hit) body = body.with_coefficient(f->index, body[f->index] + f->delta);
  }
  return PuiseuxSeries(offset, std::move(body));
}

inline PuiseuxSeries component_series(const ComponentRecipe& r, std::size_t order) {
  return component_series(r, ModularBasis::build(order));
}

}  // namespace modschwarz
