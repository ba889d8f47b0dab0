#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace geogrow {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// lowest degree first. The coefficient vector never carries trailing zeros,
/// so the zero polynomial is the empty vector and equality is coefficientwise.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  /// c * t^k
  static IntPolynomial monomial(const mpz_class& c, std::size_t k);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of t^i; zero past the degree.
  mpz_class operator[](std::size_t i) const;
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  const mpz_class& leading() const { return coeffs_.back(); }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const mpz_class& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& c) { return a *= c; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Terms of degree < n.
  IntPolynomial truncated(std::size_t n) const;
  /// t^n * p(1/t); requires n >= degree().
  IntPolynomial reversed(std::size_t n) const;
  /// p(t + a)
  IntPolynomial taylor_shift(const mpz_class& a) const;

  mpz_class evaluate(const mpz_class& x) const;

  /// Non-negative gcd of all coefficients (0 for the zero polynomial).
  mpz_class content() const;
  IntPolynomial primitive_part() const;
  IntPolynomial divided_exactly(const mpz_class& c) const;

  /// "1 - 8*t - 85*t^2"; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Exact quotient a / b over Z[t]. Throws std::domain_error when b does not
/// divide a.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient and remainder over Q[t], returned with a common positive integer
/// scale: a * scale = quotient * b + remainder.
struct PseudoDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
  mpz_class scale;
};
PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Greatest common divisor over Q[t], returned primitive with positive leading
/// coefficient. gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// (1 + t)^k style helper: (c0 + c1 t)^k.
IntPolynomial binomial_power(long c0, long c1, std::size_t k);

}  // namespace geogrow
