#pragma once

// Truncated formal power series in q over exact rationals.
//
// A QSeries of order N stands for c_0 + c_1 q + ... + c_{N-1} q^{N-1} + O(q^N).
// Binary operations return a result whose order is the minimum of the input
// orders; nothing is ever padded with guessed zeros.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "modschwarz/error.hpp"
#include "modschwarz/rational.hpp"

namespace modschwarz {

class QSeries {
 public:
  QSeries() = default;

  /// The zero series known to order `order`.
  explicit QSeries(std::size_t order) : coeffs_(order) {}

  explicit QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  QSeries(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {}

  static QSeries constant(const Rational& c, std::size_t order) {
    QSeries s(order);
    if (order > 0) s.coeffs_[0] = c;
    return s;
  }

  static QSeries monomial(std::size_t power, const Rational& c, std::size_t order) {
    QSeries s(order);
    if (power < order) s.coeffs_[power] = c;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size(); }

  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient, or nullopt if zero to its order.
  std::optional<std::size_t> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0) return i;
    return std::nullopt;
  }

  bool is_zero() const { return !valuation().has_value(); }

  QSeries truncated(std::size_t order) const {
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + std::min(order, coeffs_.size()));
    return QSeries(std::move(c));
  }

  /// Drops the first `k` coefficients, i.e. divides by q^k. Order falls by k.
  QSeries shifted_down(std::size_t k) const {
    if (k >= coeffs_.size()) return QSeries(std::size_t{0});
    return QSeries(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
  }

  /// Multiplies by q^k. The order rises by k since the low terms are known zeros.
  QSeries shifted_up(std::size_t k) const {
    std::vector<Rational> c(k);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return QSeries(std::move(c));
  }

  QSeries with_coefficient(std::size_t i, const Rational& value) const {
    QSeries s = *this;
    s.coeffs_.at(i) = value;
    return s;
  }

  /// Equality up to the common truncation order.
  friend bool operator==(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i < n; ++i)
      if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
  }

  /// First index below the common order where the two series differ.
  friend std::optional<std::size_t> first_difference(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i < n; ++i)
      if (a.coeffs_[i] != b.coeffs_[i]) return i;
    return std::nullopt;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return QSeries(std::move(c));
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
    return QSeries(std::move(c));
  }

  friend QSeries operator-(const QSeries& a) {
    std::vector<Rational> c(a.order());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs_[i];
    return QSeries(std::move(c));
  }

  friend QSeries operator*(const Rational& k, const QSeries& a) {
    std::vector<Rational> c(a.order());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coeffs_[i];
    return QSeries(std::move(c));
  }

  /// Truncated Cauchy product (schoolbook, O(N^2)).
  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n);
    Rational term;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (sgn(b.coeffs_[j]) == 0) continue;
        term = a.coeffs_[i] * b.coeffs_[j];
        c[i + j] += term;
      }
    }
    return QSeries(std::move(c));
  }

 private:
  std::vector<Rational> coeffs_;
};

/// The operator D = q d/dq: q^i -> i q^i.
inline QSeries derive(const QSeries& u) {
  std::vector<Rational> c(u.order());
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = Rational(static_cast<unsigned long>(i)) * u[i];
  return QSeries(std::move(c));
}

namespace detail {

// 1/v for a unit v, order preserved.
inline QSeries reciprocal_unit(const QSeries& v) {
  const std::size_t n = v.order();
  std::vector<Rational> r(n);
  if (n == 0) return QSeries(std::move(r));
  const Rational inv0 = 1 / v[0];
  r[0] = inv0;
  Rational acc;
  for (std::size_t k = 1; k < n; ++k) {
    acc = 0;
    for (std::size_t i = 1; i <= k; ++i)
      if (sgn(v[i]) != 0) acc += v[i] * r[k - i];
    r[k] = -acc * inv0;
  }
  return QSeries(std::move(r));
}

}  // namespace detail

/// w with w*v = u. A common q-power is cancelled first; the result order is
/// min(order(u), order(v)) minus that cancelled valuation.
inline QSeries divide(const QSeries& u, const QSeries& v) {
  const auto vv = v.valuation();
  if (!vv) throw Error(ErrorKind::DivisionByZero, "divisor is zero to its order");
  const std::size_t shift = *vv;
  const auto uv = u.valuation();
  const std::size_t n = std::min(u.order(), v.order());
  if (uv && *uv < shift && *uv < n)
    throw Error(ErrorKind::DivisionByNonUnit,
                "divisor valuation " + std::to_string(shift) + " exceeds dividend valuation " + std::to_string(*uv),
                *uv);
  if (shift >= n) throw Error(ErrorKind::DivisionByNonUnit, "divisor valuation reaches the truncation order");
  const QSeries num = u.truncated(n).shifted_down(shift);
  const QSeries den = v.truncated(n).shifted_down(shift);
  return num * detail::reciprocal_unit(den);
}

/// Series logarithm of a series with constant term 1, via D(log u) = Du/u.
inline QSeries log(const QSeries& u) {
  if (u.order() == 0) return u;
  if (u[0] != 1) throw Error(ErrorKind::NonUnitBase, "log needs constant term 1");
  const QSeries ratio = derive(u) * detail::reciprocal_unit(u);
  std::vector<Rational> c(u.order());
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = ratio[i] / Rational(static_cast<unsigned long>(i));
  return QSeries(std::move(c));
}

/// Series exponential of a series with zero constant term, via D(e) = e*D(g).
inline QSeries exp(const QSeries& g) {
  const std::size_t n = g.order();
  if (n == 0) return g;
  if (sgn(g[0]) != 0) throw Error(ErrorKind::NonvanishingInnerConstant, "exp needs zero constant term");
  const QSeries dg = derive(g);
  std::vector<Rational> e(n);
  e[0] = 1;
  Rational acc;
  for (std::size_t k = 1; k < n; ++k) {
    acc = 0;
    for (std::size_t i = 1; i <= k; ++i)
      if (sgn(dg[i]) != 0) acc += dg[i] * e[k - i];
    e[k] = acc / Rational(static_cast<unsigned long>(k));
  }
  return QSeries(std::move(e));
}

/// u^alpha = exp(alpha log u) for u with constant term exactly 1.
inline QSeries pow(const QSeries& u, const Rational& alpha) {
  if (u.order() > 0 && u[0] != 1) throw Error(ErrorKind::NonUnitBase, "pow needs constant term 1");
  return exp(alpha * log(u));
}

/// Non-negative integer power by binary exponentiation; no unit requirement.
inline QSeries pow(const QSeries& u, unsigned long e) {
  QSeries result = QSeries::constant(1, u.order());
  QSeries base = u;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// outer(inner(q)) where `outer` is read as a series in z.
///
/// Needs inner(0) = 0. If inner has valuation v >= 1, the unknown tail of
/// `outer` starts at q^{v * order(outer)}, which caps the result order.
inline QSeries compose(const QSeries& outer, const QSeries& inner) {
  if (inner.order() > 0 && sgn(inner[0]) != 0)
    throw Error(ErrorKind::NonvanishingInnerConstant, "inner series must have zero constant term");
  if (outer.order() == 0) return QSeries(std::size_t{0});
  std::size_t n = inner.order();
  if (const auto v = inner.valuation()) n = std::min(n, *v * outer.order());
  const QSeries z = inner.truncated(n);
  // Horner from the highest useful power of z.
  std::size_t top = std::min(outer.order(), n == 0 ? std::size_t{1} : n);
  QSeries acc = QSeries::constant(outer[top - 1], n);
  for (std::size_t k = top - 1; k-- > 0;) {
    acc = acc * z;
    acc = acc + QSeries::constant(outer[k], n);
  }
  return acc;
}

inline std::string to_string(const QSeries& s) {
  std::string out;
  for (std::size_t i = 0; i < s.order(); ++i) {
    if (sgn(s[i]) == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + s[i].get_str() + ")";
    if (i > 0) out += "q^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  return out + " + O(q^" + std::to_string(s.order()) + ")";
}

}  // namespace modschwarz
