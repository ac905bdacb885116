#pragma once

// Exact arithmetic: arbitrary-precision integers, dense integer polynomials in one
// variable t, and rational functions p(t)/q(t) kept in a unique canonical form.

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fano {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Dense univariate polynomial over BigInt.
// Invariant: no trailing zero coefficient is stored; the zero polynomial is empty.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<BigInt> coeffs);
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial constant(const BigInt& c);
  // c * t^deg
  static Polynomial monomial(const BigInt& c, std::size_t deg);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of t^i; zero outside the stored range.
  const BigInt& coeff(std::size_t i) const;
  const BigInt& leading() const;
  // gcd of all coefficients (non-negative); 0 for the zero polynomial.
  BigInt content() const;
  Polynomial primitive_part() const;

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator*(const BigInt& s) const;

  // Exact division: asserts that d divides *this with zero remainder.
  Polynomial exact_divide(const Polynomial& d) const;

  // Primitive polynomial gcd (content 1, positive leading coefficient) via a
  // primitive pseudo-remainder sequence. gcd(0,0) = 0.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  // Human-readable form, lowest degree first, e.g. "1 - 3*t + 3*t^2 - t^3".
  std::string str(const std::string& var = "t") const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Quotient of two integer polynomials in canonical form:
//  * numerator and denominator share no polynomial factor (primitive gcd removed),
//  * the gcd of all integer coefficients across numerator and denominator is 1,
//  * the denominator's leading coefficient is positive.
// The canonical form is unique, so equality is component-wise comparison.
class RationalFunction {
public:
  RationalFunction();  // zero
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction integer(const BigInt& v);
  static RationalFunction from_poly(Polynomial p);
  static RationalFunction variable();  // t

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  // "p(t) / q(t)", or just "p(t)" when the denominator is 1.
  std::string str() const;

private:
  void canonicalize();
  Polynomial num_, den_;
};

}  // namespace fano
