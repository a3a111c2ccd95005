#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace setopt {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Dense vector of exact rationals (points of X or Z, functionals on Z).
using Vec = std::vector<Rational>;

/// Dimension mismatch, malformed input to an operation, or a violated
/// precondition.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses an integer "p" or a fraction "p/q". Anything else (decimals,
/// exponents, whitespace, zero denominators) is rejected.
bool try_parse_rational(std::string_view text, Rational& out);
Rational parse_rational(std::string_view text);

/// p/q in lowest terms. Prefer this over the two-argument mpq_class
/// constructor, which does not canonicalize.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r);
std::string to_string(const Vec& v);  // "(a, b, c)"

Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Rational& t, const Vec& v);
Vec zeros(std::size_t n);
bool is_zero(const Vec& v);
Rational l1_norm(const Vec& v);

/// Positive rescaling to an integer vector with coprime entries.
/// Returns the factor used so offsets can be rescaled alongside.
Rational primitive_scale(const Vec& v);

inline void require(bool condition, const char* message) {
  if (!condition) throw StructuralError(message);
}

}  // namespace setopt
