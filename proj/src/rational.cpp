#include "setopt/rational.hpp"

#include <cctype>

namespace setopt {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool try_parse_rational(std::string_view text, Rational& out) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    if (!all_digits(body)) return false;
  } else {
    if (!all_digits(body.substr(0, slash)) || !all_digits(body.substr(slash + 1))) return false;
  }
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  mpq_class value;
  if (value.set_str(owned, 10) != 0) return false;
  if (value.get_den() == 0) return false;
  value.canonicalize();
  out = value;
  return true;
}

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || !try_parse_rational(text, r)) {
    throw StructuralError("not an exact rational literal: '" + std::string(text) + "'");
  }
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

Rational dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "add: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "sub: dimension mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scaled(const Rational& t, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = t * v[i];
  return r;
}

Vec zeros(std::size_t n) { return Vec(n, Rational(0)); }

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Rational l1_norm(const Vec& v) {
  Rational s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

Rational primitive_scale(const Vec& v) {
  mpz_class lcm_den = 1;
  for (const auto& x : v) {
    if (x != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  }
  mpz_class g = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    mpz_class num = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) return 1;
  Rational factor(lcm_den, g);
  factor.canonicalize();
  return factor;
}

}  // namespace setopt
