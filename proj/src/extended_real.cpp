#include "setopt/extended_real.hpp"

namespace setopt {

const Rational& ExtReal::value() const {
  require(kind_ == Kind::Finite, "ExtReal::value on an infinite element");
  return value_;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ != ExtReal::Kind::Finite) return std::strong_ordering::equal;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtReal::str() const {
  switch (kind_) {
    case Kind::MinusInf:
      return "-inf";
    case Kind::PlusInf:
      return "+inf";
    case Kind::Finite:
      break;
  }
  return value_.get_str();
}

ExtReal inf_add(const ExtReal& r, const ExtReal& s) {
  if (r.is_plus_inf() || s.is_plus_inf()) return ExtReal::plus_inf();
  if (r.is_minus_inf() || s.is_minus_inf()) return ExtReal::minus_inf();
  return ExtReal(Rational(r.value() + s.value()));
}

ExtReal residual(const ExtReal& r, const ExtReal& s) {
  if (s.is_plus_inf()) return ExtReal::minus_inf();
  if (s.is_minus_inf()) return r.is_minus_inf() ? ExtReal::minus_inf() : ExtReal::plus_inf();
  if (!r.is_finite()) return r;
  return ExtReal(Rational(r.value() - s.value()));
}

ExtReal negate(const ExtReal& r) {
  if (r.is_plus_inf()) return ExtReal::minus_inf();
  if (r.is_minus_inf()) return ExtReal::plus_inf();
  return ExtReal(Rational(-r.value()));
}

ExtReal scale(const Rational& t, const ExtReal& r) {
  require(t >= 0, "scale: negative factor");
  if (t == 0) return ExtReal(0);
  if (!r.is_finite()) return r;
  return ExtReal(Rational(t * r.value()));
}

ExtReal divide(const ExtReal& r, const Rational& t) {
  require(t > 0, "divide: non-positive divisor");
  if (!r.is_finite()) return r;
  return ExtReal(Rational(r.value() / t));
}

}  // namespace setopt
