#pragma once

// Floating-point evaluation at tau in the upper half-plane: q-series route
// (Horner in q) and closed hypergeometric route in z = 1728/j(tau).
//
// Fractional powers of q use log q = 2 pi i tau exactly, so
// q^alpha(tau + 1) = e^{2 pi i alpha} q^alpha(tau) holds by construction.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>

#include "modschwarz/error.hpp"
#include "modschwarz/hypergeometric.hpp"
#include "modschwarz/modular_forms.hpp"
#include "modschwarz/puiseux.hpp"
#include "modschwarz/rational.hpp"
#include "modschwarz/schwarzian.hpp"

namespace modschwarz {

template <std::floating_point Real>
using Complex = std::complex<Real>;

/// Rational -> Real, correctly rounded for double, ~106 bits for wider types.
template <std::floating_point Real>
Real to_real(const Rational& x) {
  if constexpr (std::same_as<Real, double> || std::same_as<Real, float>) {
    return static_cast<Real>(x.get_d());
  } else {
    mpf_class f(x, 256);
    const double hi = f.get_d();
    mpf_class rest = f - mpf_class(hi, 256);
    return static_cast<Real>(hi) + static_cast<Real>(rest.get_d());
  }
}

template <std::floating_point Real>
void require_finite(const Complex<Real>& z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error(ErrorKind::NonFiniteValue, std::string(what) + " is not finite");
}

template <std::floating_point Real>
void require_upper_half_plane(const Complex<Real>& tau) {
  if (!(tau.imag() > 0)) throw Error(ErrorKind::NotUpperHalfPlane, "Im(tau) must be positive");
}

template <std::floating_point Real>
Complex<Real> two_pi_i_tau(const Complex<Real>& tau) {
  const Real two_pi = 2 * std::numbers::pi_v<Real>;
  return {-two_pi * tau.imag(), two_pi * tau.real()};
}

/// Horner sum of the first `terms` body coefficients at q.
template <std::floating_point Real>
Complex<Real> horner(const QSeries& body, const Complex<Real>& q, std::size_t terms) {
  const std::size_t n = std::min(terms, body.order());
  Complex<Real> acc{0, 0};
  for (std::size_t i = n; i-- > 0;) acc = acc * q + Complex<Real>(to_real<Real>(body[i]), 0);
  return acc;
}

/// q^offset * sum_{i<terms} c_i q^i at q = e^{2 pi i tau}.
template <std::floating_point Real>
Complex<Real> eval_qseries(const PuiseuxSeries& f, const Complex<Real>& tau, std::size_t terms) {
  require_upper_half_plane(tau);
  const Complex<Real> log_q = two_pi_i_tau(tau);
  const Complex<Real> q = std::exp(log_q);
  const Complex<Real> lead = std::exp(to_real<Real>(f.offset()) * log_q);
  const Complex<Real> value = lead * horner(f.body(), q, terms);
  require_finite(value, "q-series value");
  return value;
}

template <std::floating_point Real>
Complex<Real> eval_qseries(const QSeries& f, const Complex<Real>& tau, std::size_t terms) {
  return eval_qseries(PuiseuxSeries::from_qseries(f), tau, terms);
}

/// F(a, b; c; z) summed to `terms` terms.
template <std::floating_point Real>
Complex<Real> eval_hypergeometric(const HypergeomParams& p, const Complex<Real>& z, std::size_t terms) {
  const Real a = to_real<Real>(p.a), b = to_real<Real>(p.b), c = to_real<Real>(p.c);
  Complex<Real> term{1, 0}, sum{1, 0};
  for (std::size_t k = 0; k + 1 < terms; ++k) {
    const Real kk = static_cast<Real>(k);
    term *= z * ((a + kk) * (b + kk) / ((c + kk) * (kk + 1)));
    sum += term;
  }
  return sum;
}

/// z = 1728/j(tau) from the q-series of 1728/j, split as q * unit(q) so the
/// caller can take fractional powers on the q-anchored branch.
template <std::floating_point Real>
struct JInverseValue {
  Complex<Real> z;
  Complex<Real> unit;  // z / q, close to 1728 near the cusp
};

template <std::floating_point Real>
JInverseValue<Real> eval_j_inverse(const Complex<Real>& tau, std::size_t terms) {
  require_upper_half_plane(tau);
  const QSeries jinv = j_inverse(std::max<std::size_t>(terms, 2));
  const Complex<Real> q = std::exp(two_pi_i_tau(tau));
  const Complex<Real> unit = horner(jinv.shifted_down(1), q, terms);
  const Complex<Real> z = q * unit;
  require_finite(z, "1728/j");
  return {z, unit};
}

struct EvalOptions {
  double disk_margin = 0.05;
};

/// h = (1728/j)^{n'/m} F(+) / F(-) with both F summed to `terms` terms.
template <std::floating_point Real>
Complex<Real> eval_h_hypergeometric(long m, long n_prime, const Complex<Real>& tau, std::size_t terms,
                                    const EvalOptions& options = {}) {
  require_upper_half_plane(tau);
  const ComponentRecipe top = ComponentRecipe::make(m, n_prime, Component::First);
  const ComponentRecipe bottom = ComponentRecipe::make(m, n_prime, Component::Second);
  const JInverseValue<Real> j = eval_j_inverse(tau, terms);
  if (std::abs(j.z) >= Real(1) - static_cast<Real>(options.disk_margin))
    throw Error(ErrorKind::OutsideDisk, "|1728/j(tau)| = " + std::to_string(static_cast<double>(std::abs(j.z))) +
                                            " is outside the convergence disk");
  // log z = 2 pi i tau + Log(z/q); the second term stays near log 1728.
  const Complex<Real> log_z = two_pi_i_tau(tau) + std::log(j.unit);
  const Complex<Real> outer = std::exp(to_real<Real>(rational(n_prime, m)) * log_z);
  const Complex<Real> value =
      outer * eval_hypergeometric(top.params, j.z, terms) / eval_hypergeometric(bottom.params, j.z, terms);
  require_finite(value, "hypergeometric h");
  return value;
}

template <std::floating_point Real>
struct EvalReport {
  Complex<Real> tau;
  Complex<Real> via_series;     // scaled by 1728^{n/m} to the closed form's normalization
  Complex<Real> via_hypergeom;
  Real rel_error = 0;
  std::size_t terms_used = 0;
  Real tail_bound = 0;
};

/// Heuristic remainder estimate |c_{N-1}| |q|^{N-1} rho/(1-rho) with
/// rho = |q| |c_{N-1}/c_{N-2}|; not a certified bound.
template <std::floating_point Real>
Real tail_estimate(const QSeries& body, const Complex<Real>& tau, std::size_t terms) {
  const std::size_t n = std::min(terms, body.order());
  if (n < 2) return 0;
  const Real abs_q = std::exp(-2 * std::numbers::pi_v<Real> * tau.imag());
  const Real last = std::abs(to_real<Real>(body[n - 1]));
  const Real prev = std::abs(to_real<Real>(body[n - 2]));
  const Real last_term = last * std::pow(abs_q, static_cast<Real>(n - 1));
  if (prev == 0) return last_term;
  const Real rho = abs_q * last / prev;
  if (!(rho < 1)) return last_term;
  return last_term * rho / (1 - rho);
}

/// Compares the closed form against an already solved h = sol.h.
template <std::floating_point Real>
EvalReport<Real> cross_check(const SolutionBundle& sol, const Complex<Real>& tau, std::size_t terms,
                             const EvalOptions& options = {}) {
  if (sol.n >= sol.m)
    throw Error(ErrorKind::ClosedFormRequiresReducedN, "closed hypergeometric form needs n < m, got n=" +
                                                           std::to_string(sol.n) + ", m=" + std::to_string(sol.m));
  require_upper_half_plane(tau);
  EvalReport<Real> report;
  report.tau = tau;
  const Real scale = std::pow(Real(1728), to_real<Real>(rational(sol.n, sol.m)));
  report.via_series = scale * eval_qseries(sol.h, tau, terms);
  report.via_hypergeom = eval_h_hypergeometric(sol.m, sol.n, tau, terms, options);
  const Real denom = std::max(std::abs(report.via_series), std::numeric_limits<Real>::epsilon());
  report.rel_error = std::abs(report.via_series - report.via_hypergeom) / denom;
  report.terms_used = std::min(terms, sol.h.order());
  report.tail_bound = tail_estimate(sol.h.body(), tau, terms);
  return report;
}

template <std::floating_point Real>
EvalReport<Real> cross_check(long m, long n, const Complex<Real>& tau, std::size_t terms,
                             const EvalOptions& options = {}) {
  validate_parameters(m, n);
  if (n >= m)
    throw Error(ErrorKind::ClosedFormRequiresReducedN, "closed hypergeometric form needs n < m, got n=" +
                                                           std::to_string(n) + ", m=" + std::to_string(m));
  require_upper_half_plane(tau);
  return cross_check(solve(m, n, terms), tau, terms, options);
}

}  // namespace modschwarz
