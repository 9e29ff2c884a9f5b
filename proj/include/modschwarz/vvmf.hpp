#pragma once

// Two-component vector-valued modular forms: the minimal-weight form F0,
// weight raising F -> E6 F - (1/lambda) E4 D_k F, and Wronskian checks.

#include <cstddef>
#include <numeric>
#include <string>

#include "modschwarz/error.hpp"
#include "modschwarz/hypergeometric.hpp"
#include "modschwarz/modular_forms.hpp"
#include "modschwarz/puiseux.hpp"
#include "modschwarz/rational.hpp"

namespace modschwarz {

/// Diagonal exponents of rho(T) = diag(e^{2 pi i exp_first}, e^{2 pi i exp_second}).
struct ReprData {
  long m = 0;
  long n_prime = 0;
  Rational exp_first;
  Rational exp_second;

  static ReprData make(long m, long n_prime) {
    if (m < 7 || n_prime <= 0 || n_prime >= m || std::gcd(m, n_prime) != 1)
      throw Error(ErrorKind::InvalidRepresentation, "need m >= 7, 0 < n' < m, gcd(m, n') = 1; got m=" +
                                                        std::to_string(m) + ", n'=" + std::to_string(n_prime));
    ReprData r{m, n_prime, rational(m + n_prime, 2 * m), rational(m - n_prime, 2 * m)};
    // mu1 mu2 = e^{2 pi i (a + b)} must be a 6th root of unity.
    if (!is_integer(6 * (r.exp_first + r.exp_second)))
      throw Error(ErrorKind::InvalidRepresentation, "(mu1 mu2)^6 != 1");
    // mu1/mu2 = e^{2 pi i n'/m}; primitive 6th roots have n'/m = 1/6 or 5/6 mod 1.
    const Rational ratio = r.exp_first - r.exp_second;
    if (ratio == rational(1, 6) || ratio == rational(5, 6))
      throw Error(ErrorKind::InvalidRepresentation, "mu1/mu2 is a primitive 6th root of unity");
    return r;
  }
};

struct VectorForm {
  PuiseuxSeries first;
  PuiseuxSeries second;
  Rational weight;
  ReprData repr;
  int level = 0;
};

inline VectorForm minimal_form(const ReprData& repr, const ModularBasis& basis) {
  VectorForm f{component_series(ComponentRecipe::make(repr.m, repr.n_prime, Component::First), basis),
               component_series(ComponentRecipe::make(repr.m, repr.n_prime, Component::Second), basis),
               Rational(5), repr, 0};
  return f;
}

/// Pivot lambda = offset(first) - weight/12; dividing by it cancels the
/// leading term of the first component.
inline Rational raise_pivot(const VectorForm& f) { return f.first.offset() - f.weight / 12; }

/// E6 F - (1/lambda) E4 D_k F. Leading constants are kept as computed.
inline VectorForm raise_weight(const VectorForm& f, const ModularBasis& basis) {
  const Rational lambda = raise_pivot(f);
  if (sgn(lambda) == 0) throw Error(ErrorKind::PivotVanishes, "pivot offset - weight/12 is zero");
  const PuiseuxSeries e4 = PuiseuxSeries::from_qseries(basis.e4);
  const PuiseuxSeries e6 = PuiseuxSeries::from_qseries(basis.e6);
  const Rational inv = 1 / lambda;

  auto raise = [&](const PuiseuxSeries& c) {
    return e6 * c - inv * (e4 * serre_derivative(c, f.weight, basis.e2));
  };
  VectorForm g{raise(f.first), raise(f.second), f.weight + 6, f.repr, f.level + 1};

  if (g.first.is_zero() || g.first.offset() != f.first.offset() + 1)
    throw Error(ErrorKind::LeadingCancellation,
                "first component did not move by exactly one power of q (offset " + to_string(g.first.offset()) + ")",
                1);
  if (g.second.is_zero() || g.second.offset() != f.second.offset())
    throw Error(ErrorKind::LeadingCancellation, "second component leading term vanished", 0);
  return g;
}

/// Printed closed forms for the leading constants after one raise from F0.
inline Rational printed_c1(long m, long n_prime) {
  return rational(377 * m * m + 2004 * m * n_prime - 2466 * n_prime * n_prime, (m - n_prime) * (m + 6 * n_prime));
}

inline Rational printed_c2(long m, long n_prime) { return rational(12 * n_prime, m + 6 * n_prime); }

/// W(F) = D(f1) f2 - f1 D(f2).
inline PuiseuxSeries wronskian(const PuiseuxSeries& f1, const PuiseuxSeries& f2) {
  return derive(f1) * f2 - f1 * derive(f2);
}

inline PuiseuxSeries wronskian(const VectorForm& f) { return wronskian(f.first, f.second); }

struct WronskianCheck {
  Rational constant;
  Rational exponent;
};

/// Confirms W(F) = c Delta^e with e = offset(first) + offset(second) and c a
/// nonzero constant, for every coefficient index below `order`.
inline WronskianCheck wronskian_check(const VectorForm& f, std::size_t order, const QSeries& eta24_body) {
  const Rational e = f.first.offset() + f.second.offset();
  if (!is_integer(e) || sgn(e) < 0)
    throw Error(ErrorKind::NotProportionalToDeltaPower, "exponent " + to_string(e) + " is not a non-negative integer",
                0);
  const PuiseuxSeries w = wronskian(f);
  if (w.is_zero()) throw Error(ErrorKind::NotProportionalToDeltaPower, "Wronskian vanishes identically", 0);
  if (w.offset() != e)
    throw Error(ErrorKind::NotProportionalToDeltaPower,
                "Wronskian starts at q^" + to_string(w.offset()) + " instead of q^" + to_string(e), 0);
  // W / Delta^e = body(W) / (eta^24 body)^e since Delta = q * eta^24 body.
  const QSeries ratio = divide(w.body(), pow(eta24_body, e.get_num().get_ui()));
  if (ratio.order() < order)
    throw Error(ErrorKind::InsufficientOrder, "Wronskian known to order " + std::to_string(ratio.order()) +
                                                  ", check requested " + std::to_string(order));
  for (std::size_t i = 1; i < order; ++i)
    if (sgn(ratio[i]) != 0)
      throw Error(ErrorKind::NotProportionalToDeltaPower,
                  "W/Delta^" + to_string(e) + " has nonzero coefficient " + ratio[i].get_str() + " at q^" +
                      std::to_string(i),
                  i);
  return {ratio[0], e};
}

inline WronskianCheck wronskian_check(const VectorForm& f, std::size_t order) {
  return wronskian_check(f, order, eta_power(24, order).body());
}

}  // namespace modschwarz
