#pragma once

// q-expansions of the level-one objects: E2, E4, E6, powers of eta, Delta,
// 1728/j, plus the Serre derivative.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modschwarz/error.hpp"
#include "modschwarz/puiseux.hpp"
#include "modschwarz/qseries.hpp"
#include "modschwarz/rational.hpp"

namespace modschwarz {

/// Which classical object a series is, with its weight.
struct FormLabel {
  enum class Kind { E2, E4, E6, EtaPower, Delta, JInverse };

  Kind kind;
  int eta_exponent = 0;

  Rational weight() const {
    switch (kind) {
      case Kind::E2: return 2;
      case Kind::E4: return 4;
      case Kind::E6: return 6;
      case Kind::EtaPower: return rational(eta_exponent, 2);
      case Kind::Delta: return 12;
      case Kind::JInverse: return 0;
    }
    return 0;
  }
};

/// sigma_k(n) by direct divisor enumeration.
inline Integer divisor_sum(unsigned long n, unsigned long k) {
  Integer total = 0;
  Integer term;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), d, k);
    total += term;
    const unsigned long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(term.get_mpz_t(), e, k);
      total += term;
    }
  }
  return total;
}

/// E_k for k in {2, 4, 6}: 1 + c_k sum sigma_{k-1}(n) q^n.
inline QSeries eisenstein(int k, std::size_t order) {
  long scale = 0;
  switch (k) {
    case 2: scale = -24; break;
    case 4: scale = 240; break;
    case 6: scale = -504; break;
    default: throw Error(ErrorKind::UnsupportedWeight, "Eisenstein weight " + std::to_string(k) + " not in {2,4,6}");
  }
  std::vector<Rational> c(order);
  if (order > 0) c[0] = 1;
  for (std::size_t n = 1; n < order; ++n)
    c[n] = Rational(Integer(scale) * divisor_sum(n, static_cast<unsigned long>(k - 1)));
  return QSeries(std::move(c));
}

/// prod_{n>=1} (1 - q^n) from the pentagonal number theorem.
inline QSeries euler_product(std::size_t order) {
  std::vector<Rational> c(order);
  if (order > 0) c[0] = 1;
  for (long k = 1;; ++k) {
    const long sign = (k % 2 == 0) ? 1 : -1;
    const std::size_t p1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    const std::size_t p2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (p1 >= order) break;
    c[p1] += sign;
    if (p2 < order) c[p2] += sign;
  }
  return QSeries(std::move(c));
}

/// eta^e = q^{e/24} prod (1 - q^n)^e for positive even e.
inline PuiseuxSeries eta_power(int e, std::size_t order) {
  if (e <= 0 || e % 2 != 0)
    throw Error(ErrorKind::OddExponent, "eta exponent must be positive and even, got " + std::to_string(e));
  return PuiseuxSeries(rational(e, 24), pow(euler_product(order), static_cast<unsigned long>(e)));
}

namespace detail {

inline QSeries delta_from_eta24(const QSeries& eta24_body, std::size_t order) {
  return eta24_body.shifted_up(1).truncated(order);
}

inline QSeries delta_from_eisenstein(const QSeries& e4, const QSeries& e6) {
  return rational(1, 1728) * (pow(e4, 3UL) - e6 * e6);
}

inline QSeries j_inverse_from(const QSeries& delta, const QSeries& e4) {
  return divide(Rational(1728) * delta, pow(e4, 3UL));
}

}  // namespace detail

/// Delta as an ordinary q-series, computed from both eta^24 and
/// (E4^3 - E6^2)/1728; the two must agree.
inline QSeries delta(std::size_t order) {
  const QSeries via_eta = detail::delta_from_eta24(eta_power(24, order).body(), order);
  const QSeries via_eis = detail::delta_from_eisenstein(eisenstein(4, order), eisenstein(6, order));
  if (const auto i = first_difference(via_eta, via_eis))
    throw Error(ErrorKind::InternalMismatch, "eta^24 and (E4^3-E6^2)/1728 disagree", *i);
  return via_eta;
}

/// 1728/j = 1728 Delta / E4^3, starting 1728 q - 1285632 q^2 + ...
inline QSeries j_inverse(std::size_t order) {
  if (order < 2) throw Error(ErrorKind::InsufficientOrder, "j_inverse needs order >= 2");
  return detail::j_inverse_from(delta(order), eisenstein(4, order));
}

/// D_k f = D f - (k/12) E2 f, with E2 supplied by the caller.
inline PuiseuxSeries serre_derivative(const PuiseuxSeries& f, const Rational& k, const QSeries& e2) {
  const QSeries e2f = e2 * f.body();
  const std::size_t n = e2f.order();
  const Rational k12 = k / 12;
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i)
    c[i] = (f.offset() + Rational(static_cast<unsigned long>(i))) * f.body()[i] - k12 * e2f[i];
  return PuiseuxSeries(f.offset(), QSeries(std::move(c)));
}

inline PuiseuxSeries serre_derivative(const PuiseuxSeries& f, const Rational& k) {
  return serre_derivative(f, k, eisenstein(2, f.order()));
}

/// Deliberate corruption of one input coefficient, used to show that the
/// verification chain is sensitive to it.
struct SeededFault {
  enum class Target { E4, Eta24, FirstComponent, SecondComponent };

  Target target;
  std::size_t index;
  Rational delta{1};
};

inline std::string to_string(SeededFault::Target t) {
  switch (t) {
    case SeededFault::Target::E4: return "E4";
    case SeededFault::Target::Eta24: return "eta24";
    case SeededFault::Target::FirstComponent: return "first-component";
    case SeededFault::Target::SecondComponent: return "second-component";
  }
  return "unknown";
}

/// The scalar forms every solve needs, expanded once to a common order.
struct ModularBasis {
  std::size_t order = 0;
  QSeries e2, e4, e6;
  QSeries eta24_body;
  QSeries delta;
  QSeries j_inverse;
  std::optional<SeededFault> fault;

  static ModularBasis build(std::size_t order, std::optional<SeededFault> fault = std::nullopt) {
    ModularBasis b;
    b.order = order;
    b.e2 = eisenstein(2, order);
    b.e4 = eisenstein(4, order);
    b.e6 = eisenstein(6, order);
    b.eta24_body = eta_power(24, order).body();
    b.delta = modschwarz::delta(order);
    b.fault = fault;
    if (fault && fault->target == SeededFault::Target::E4)
      b.e4 = b.e4.with_coefficient(fault->index, b.e4[fault->index] + fault->delta);
    if (fault && fault->target == SeededFault::Target::Eta24) {
      b.eta24_body = b.eta24_body.with_coefficient(fault->index, b.eta24_body[fault->index] + fault->delta);
      b.delta = detail::delta_from_eta24(b.eta24_body, order);
    }
    b.j_inverse = detail::j_inverse_from(b.delta, b.e4);
    return b;
  }
};

}  // namespace modschwarz
