#pragma once

#include <compare>
#include <string>

#include "setopt/rational.hpp"

namespace setopt {

/// An element of the extended real line with explicit infinite states.
/// Ordered -inf < finite < +inf.
class ExtReal {
 public:
  enum class Kind { MinusInf, Finite, PlusInf };

  ExtReal() : kind_(Kind::Finite), value_(0) {}
  ExtReal(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExtReal(int v) : kind_(Kind::Finite), value_(v) {}                 // NOLINT(google-explicit-constructor)

  static ExtReal plus_inf() { return ExtReal(Kind::PlusInf); }
  static ExtReal minus_inf() { return ExtReal(Kind::MinusInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_plus_inf() const { return kind_ == Kind::PlusInf; }
  bool is_minus_inf() const { return kind_ == Kind::MinusInf; }
  /// Precondition: is_finite().
  const Rational& value() const;

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

  std::string str() const;

 private:
  explicit ExtReal(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Rational value_;
};

/// Inf-addition: +inf absorbs everything (including -inf), then -inf.
ExtReal inf_add(const ExtReal& r, const ExtReal& s);

/// Inf-residual r -. s = inf{ t | r <= s +. t }, with inf of the empty set +inf.
ExtReal residual(const ExtReal& r, const ExtReal& s);

ExtReal negate(const ExtReal& r);

/// t * r for t >= 0, with 0 * r = 0 (the neutral element).
ExtReal scale(const Rational& t, const ExtReal& r);

/// r / t for t > 0; infinities are preserved.
ExtReal divide(const ExtReal& r, const Rational& t);

inline std::string to_string(const ExtReal& r) { return r.str(); }

}  // namespace setopt
