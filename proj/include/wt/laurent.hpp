#pragma once

// Exact integer Laurent polynomials in t, and polynomials in
// x = (1 - t)(1 - t^-1) = 2 - t - t^-1 without constant term.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class LaurentPoly {
 public:
  using Exponent = std::int64_t;

  LaurentPoly() = default;
  /// c * t^e
  static LaurentPoly monomial(BigInt coefficient, Exponent exponent);
  static LaurentPoly constant(BigInt value) { return monomial(std::move(value), 0); }

  /// Nonzero coefficients, ascending exponent.
  const std::map<Exponent, BigInt>& terms() const noexcept { return terms_; }
  BigInt coefficient(Exponent exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// t -> t^-1
  LaurentPoly involute() const;
  /// Exact value at a nonzero rational; throws DomainError at 0.
  Rational eval(const Rational& t) const;

  bool is_symmetric() const { return involute() == *this; }
  bool vanishes_at_one() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(Exponent exponent, const BigInt& coefficient);
  std::map<Exponent, BigInt> terms_;
};

/// Sum of `c*t^e` terms in ascending exponent order, e.g.
/// "-1*t^-3 + 2*t^-2 - 1*t^-1"; "0" for the zero polynomial.
std::string render(const LaurentPoly& f);
/// Accepts the rendered form plus shorthands: "t", "t^-2", "3", "2*t",
/// "-t^3", with arbitrary spacing.
LaurentPoly parse_laurent(std::string_view text);

class XPoly {
 public:
  XPoly() = default;
  /// coefficients[i] multiplies x^(i+1).
  explicit XPoly(std::vector<BigInt> coefficients);

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  /// Coefficient of x^power for power >= 1.
  BigInt coefficient(std::size_t power) const;
  std::size_t degree() const noexcept { return coefficients_.size(); }
  bool is_zero() const noexcept { return coefficients_.empty(); }

  Rational eval(const Rational& x) const;

  friend bool operator==(const XPoly&, const XPoly&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// "2x - 4x^2 + x^3"; "0" for the zero polynomial.
std::string render(const XPoly& p);
XPoly parse_x_poly(std::string_view text);

/// The unique P with P(2 - t - t^-1) = f. Throws DomainError when f is not
/// symmetric or does not vanish at t = 1.
XPoly to_x_poly(const LaurentPoly& f);
/// Substitutes x = 2 - t - t^-1.
LaurentPoly from_x_poly(const XPoly& p);

/// t^n + t^-n (2 for n = 0).
LaurentPoly symmetric_power(std::int64_t n);

}  // namespace wt
