#pragma once

// The Schwarzian solver: h = f1/f2 from the raised vector-valued form, its
// Schwarz derivative in the D = q d/dq convention, the E4-proportionality
// check and the associated second-order ODE y'' + s E4 y = 0.

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modschwarz/error.hpp"
#include "modschwarz/modular_forms.hpp"
#include "modschwarz/puiseux.hpp"
#include "modschwarz/qseries.hpp"
#include "modschwarz/rational.hpp"
#include "modschwarz/vvmf.hpp"

namespace modschwarz {

/// {h, tau} = (h''/h')' - (1/2)(h''/h')^2 with ' = D.
inline QSeries schwarz_derivative(const PuiseuxSeries& h) {
  const PuiseuxSeries h1 = derive(h);
  if (h1.is_zero()) throw Error(ErrorKind::DegenerateDerivative, "h' is zero to its order");
  const PuiseuxSeries h2 = derive(h1);
  const QSeries ratio = (h2 / h1).to_qseries();
  return derive(ratio) - rational(1, 2) * (ratio * ratio);
}

/// Returns c when sd = c * E4 through every index below `order`.
inline Rational verify_proportionality(const QSeries& sd, std::size_t order, const QSeries& e4) {
  const QSeries ratio = divide(sd, e4);
  if (ratio.order() < order)
    throw Error(ErrorKind::InsufficientOrder,
                "quotient known to order " + std::to_string(ratio.order()) + ", need " + std::to_string(order));
  for (std::size_t i = 1; i < order; ++i)
    if (sgn(ratio[i]) != 0)
      throw Error(ErrorKind::NotProportional,
                  "{h}/E4 has residual " + ratio[i].get_str() + " at q^" + std::to_string(i), i);
  return ratio[0];
}

inline Rational verify_proportionality(const QSeries& sd, std::size_t order) {
  return verify_proportionality(sd, order, eisenstein(4, order));
}

/// y2 = 1/sqrt(h'), y1 = h y2, each up to the dropped constant sqrt(lead(h')).
inline std::pair<PuiseuxSeries, PuiseuxSeries> ode_solutions(const PuiseuxSeries& h) {
  const PuiseuxSeries h1 = derive(h);
  if (h1.is_zero()) throw Error(ErrorKind::DegenerateDerivative, "h' is zero to its order");
  const PuiseuxSeries root = sqrt(h1.normalized());
  const PuiseuxSeries one = PuiseuxSeries::monomial(0, 1, root.order());
  PuiseuxSeries y2 = one / root;
  PuiseuxSeries y1 = h * y2;
  return {std::move(y1), std::move(y2)};
}

/// First index below `order` where D^2 y + s * weight_form * y is nonzero.
/// `weight_form` is E4 in production; tests substitute 1.
inline std::optional<std::size_t> ode_residual_index(const PuiseuxSeries& y, const Rational& s, std::size_t order,
                                                     const QSeries& weight_form) {
  if (y.is_zero()) return std::nullopt;
  const QSeries ey = weight_form * y.body();
  if (ey.order() < order)
    throw Error(ErrorKind::InsufficientOrder,
                "ODE residual known to order " + std::to_string(ey.order()) + ", need " + std::to_string(order));
  Rational exponent, residual;
  for (std::size_t i = 0; i < order; ++i) {
    exponent = y.offset() + Rational(static_cast<unsigned long>(i));
    residual = exponent * exponent * y.body()[i] + s * ey[i];
    if (sgn(residual) != 0) return i;
  }
  return std::nullopt;
}

inline bool verify_ode(const PuiseuxSeries& y, const Rational& s, std::size_t order, const QSeries& weight_form) {
  if (const auto i = ode_residual_index(y, s, order, weight_form))
    throw Error(ErrorKind::OdeResidualNonzero, "y'' + s E4 y is nonzero at q^(offset+" + std::to_string(*i) + ")",
                *i);
  return true;
}

inline bool verify_ode(const PuiseuxSeries& y, const Rational& s, std::size_t order) {
  return verify_ode(y, s, order, eisenstein(4, order));
}

/// Per-level data from the weight-raising chain.
struct LevelReport {
  int level = 0;
  Rational weight;
  Rational first_offset;
  Rational second_offset;
  Rational first_leading;   // c1 (1 at level 0)
  Rational second_leading;  // c2 (1 at level 0)
  WronskianCheck wronskian;
};

struct SolutionBundle {
  long m = 0;
  long n = 0;
  long n_prime = 0;
  long r = 0;
  std::size_t order = 0;
  PuiseuxSeries h;
  VectorForm form;
  Rational schwarz_constant;
  Rational ode_parameter;
  std::vector<LevelReport> levels;
};

/// The constants the verified h must produce in the D convention.
inline Rational expected_schwarz_constant(long m, long n) {
  const Rational x = rational(n, m);
  return -rational(1, 2) * x * x;
}

inline Rational expected_ode_parameter(long m, long n) {
  const Rational x = rational(n, 2 * m);
  return -x * x;
}

inline void validate_parameters(long m, long n) {
  if (m < 7) throw Error(ErrorKind::InvalidParameters, "m >= 7 required, got m=" + std::to_string(m));
  if (n < 1) throw Error(ErrorKind::InvalidParameters, "n >= 1 required, got n=" + std::to_string(n));
  if (std::gcd(m, n) != 1)
    throw Error(ErrorKind::InvalidParameters,
                "gcd(m, n) must be 1, got gcd(" + std::to_string(m) + ", " + std::to_string(n) + ")");
}

struct SolveOptions {
  std::optional<SeededFault> fault;
  bool check_ode = true;
};

namespace detail {

inline LevelReport level_report(const VectorForm& f, const WronskianCheck& w) {
  return {f.level, f.weight, f.first.offset(), f.second.offset(), f.first.leading_coefficient(),
          f.second.leading_coefficient(), w};
}

}  // namespace detail

/// Builds h for {h} = -(1/2)(n/m)^2 E4 and verifies every identity through
/// index `order`. Throws on the first failing check.
inline SolutionBundle solve(long m, long n, std::size_t order, const SolveOptions& options = {}) {
  validate_parameters(m, n);
  if (order < 2) throw Error(ErrorKind::InsufficientOrder, "solve needs order >= 2");
  SolutionBundle out;
  out.m = m;
  out.n = n;
  out.n_prime = n % m;
  out.r = n / m;
  out.order = order;

  // Each raise shortens the first component by one coefficient.
  const std::size_t working = order + static_cast<std::size_t>(out.r);
  const ModularBasis basis = ModularBasis::build(working, options.fault);

  VectorForm form = minimal_form(ReprData::make(m, out.n_prime), basis);
  out.levels.push_back(detail::level_report(form, wronskian_check(form, order, basis.eta24_body)));
  for (long i = 0; i < out.r; ++i) {
    form = raise_weight(form, basis);
    out.levels.push_back(detail::level_report(form, wronskian_check(form, order, basis.eta24_body)));
  }

  out.h = (form.first / form.second).normalized().truncated(order);
  if (out.h.offset() != rational(n, m))
    throw Error(ErrorKind::ConstantMismatch, "h starts at q^" + to_string(out.h.offset()), 0);

  const QSeries sd = schwarz_derivative(out.h);
  out.schwarz_constant = verify_proportionality(sd, order, basis.e4);
  if (out.schwarz_constant != expected_schwarz_constant(m, n))
    throw Error(ErrorKind::ConstantMismatch, "{h}/E4 = " + to_string(out.schwarz_constant), 0);

  out.ode_parameter = expected_ode_parameter(m, n);
  if (options.check_ode) {
    const auto [y1, y2] = ode_solutions(out.h);
    verify_ode(y1, out.ode_parameter, order, basis.e4);
    verify_ode(y2, out.ode_parameter, order, basis.e4);
  }
  out.form = std::move(form);
  return out;
}

}  // namespace modschwarz
