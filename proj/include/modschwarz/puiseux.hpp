#pragma once

// q^offset * body(q) with a rational offset.
//
// Normal form: unless the body is zero to its order, its constant term is
// nonzero and the offset carries the full valuation. Shifting the valuation
// into the offset shortens the body by the same amount.

#include <cstddef>
#include <string>
#include <utility>

#include "modschwarz/error.hpp"
#include "modschwarz/qseries.hpp"
#include "modschwarz/rational.hpp"

namespace modschwarz {

class PuiseuxSeries {
 public:
  PuiseuxSeries() = default;

  PuiseuxSeries(Rational offset, QSeries body) : offset_(std::move(offset)), body_(std::move(body)) {
    normalize();
  }

  static PuiseuxSeries from_qseries(const QSeries& s) { return PuiseuxSeries(Rational(0), s); }

  static PuiseuxSeries monomial(const Rational& offset, const Rational& c, std::size_t order) {
    return PuiseuxSeries(offset, QSeries::constant(c, order));
  }

  const Rational& offset() const noexcept { return offset_; }
  const QSeries& body() const noexcept { return body_; }
  std::size_t order() const noexcept { return body_.order(); }
  bool is_zero() const { return body_.is_zero(); }

  /// Coefficient of q^offset; zero for the zero series.
  Rational leading_coefficient() const { return body_.order() == 0 ? Rational(0) : body_[0]; }

  PuiseuxSeries truncated(std::size_t order) const { return PuiseuxSeries(offset_, body_.truncated(order)); }

  /// Rescaled so that the leading coefficient is 1.
  PuiseuxSeries normalized() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "cannot normalize the zero series");
    return PuiseuxSeries(offset_, (1 / body_[0]) * body_);
  }

  /// Valid when offset is a non-negative integer.
  QSeries to_qseries() const {
    if (is_zero()) return QSeries(body_.order());
    if (!is_integer(offset_) || sgn(offset_) < 0)
      throw Error(ErrorKind::IrrationalOffset, "offset " + to_string(offset_) + " is not a non-negative integer");
    return body_.shifted_up(offset_.get_num().get_ui());
  }

  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.offset_ == b.offset_ && a.body_ == b.body_;
  }

  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    return PuiseuxSeries(a.offset_ + b.offset_, a.body_ * b.body_);
  }

  friend PuiseuxSeries operator*(const Rational& k, const PuiseuxSeries& a) {
    return PuiseuxSeries(a.offset_, k * a.body_);
  }

  friend PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "Puiseux division by zero series");
    if (a.is_zero()) return PuiseuxSeries(a.offset_ - b.offset_, QSeries(std::min(a.order(), b.order())));
    return PuiseuxSeries(a.offset_ - b.offset_, divide(a.body_, b.body_));
  }

  /// Sum of two series whose offsets differ by an integer.
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.is_zero() && a.order() >= b.order()) return b;
    if (b.is_zero() && b.order() >= a.order()) return a;
    const Rational gap = b.offset_ - a.offset_;
    if (!is_integer(gap)) {
      if (a.is_zero()) return b;
      if (b.is_zero()) return a;
      throw Error(ErrorKind::IncompatibleOffsets,
                  "offsets " + to_string(a.offset_) + " and " + to_string(b.offset_) + " differ by a non-integer");
    }
    if (sgn(gap) < 0) return b + a;
    const std::size_t d = gap.get_num().get_ui();
    return PuiseuxSeries(a.offset_, a.body_ + b.body_.shifted_up(d));
  }

  friend PuiseuxSeries operator-(const PuiseuxSeries& a) { return PuiseuxSeries(a.offset_, -a.body_); }

  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

 private:
  void normalize() {
    const auto v = body_.valuation();
    if (!v || *v == 0) return;
    offset_ += Rational(static_cast<unsigned long>(*v));
    body_ = body_.shifted_down(*v);
  }

  Rational offset_{0};
  QSeries body_;
};

/// D q^{alpha+i} = (alpha+i) q^{alpha+i}.
inline PuiseuxSeries derive(const PuiseuxSeries& f) {
  std::vector<Rational> c(f.order());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = (f.offset() + Rational(static_cast<unsigned long>(i))) * f.body()[i];
  return PuiseuxSeries(f.offset(), QSeries(std::move(c)));
}

/// Halves the offset and takes the square root of a body with constant term 1.
/// Callers normalize first; the scalar sqrt of a leading coefficient is dropped.
inline PuiseuxSeries sqrt(const PuiseuxSeries& f) {
  if (f.is_zero()) return PuiseuxSeries(f.offset() / 2, f.body());
  return PuiseuxSeries(f.offset() / 2, pow(f.body(), rational(1, 2)));
}

inline std::string to_string(const PuiseuxSeries& f) {
  return "q^(" + to_string(f.offset()) + ") * [" + to_string(f.body()) + "]";
}

}  // namespace modschwarz
