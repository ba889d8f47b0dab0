#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geogrow/polynomial.hpp"

namespace geogrow {

/// Power series given as num/den with integer coefficients, kept in canonical
/// form: gcd(num, den) = 1 over Q, no common integer content, den(0) > 0.
/// Two series are equal iff their canonical pairs are equal.
class RationalFunction {
public:
  RationalFunction() : den_{1} {}
  /// Throws std::domain_error if den is zero or the reduced den(0) vanishes.
  RationalFunction(IntPolynomial num, IntPolynomial den);
  /// A polynomial, as a series.
  explicit RationalFunction(IntPolynomial p) : RationalFunction(std::move(p), IntPolynomial{1}) {}

  const IntPolynomial& numerator() const noexcept { return num_; }
  const IntPolynomial& denominator() const noexcept { return den_; }

  /// First k Taylor coefficients at t = 0.
  std::vector<mpz_class> taylor(std::size_t k) const;

  /// Multiply by t^k.
  RationalFunction shifted(std::size_t k) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// "(num) / (den)", or just the numerator when den = 1.
  std::string to_string(const std::string& var = "t") const;

private:
  IntPolynomial num_;
  IntPolynomial den_;
};

/// Index of the first differing Taylor coefficient among the first k, if any.
std::optional<std::size_t> first_difference(const RationalFunction& a, const RationalFunction& b, std::size_t k);

/// Splits p into powers of t, then each hint (as often as it divides), then
/// linear factors found by the rational-root test, then whatever is left.
/// The leading pair is the integer unit/content.
struct Factorization {
  mpz_class unit;
  std::vector<std::pair<IntPolynomial, int>> factors;

  IntPolynomial expand() const;
  std::string to_string(const std::string& var = "t") const;
};
Factorization factor_with_hints(const IntPolynomial& p, const std::vector<IntPolynomial>& hints);

/// Numerator and denominator each printed via factor_with_hints.
std::string factored_string(const RationalFunction& f, const std::vector<IntPolynomial>& hints,
                            const std::string& var = "t");

}  // namespace geogrow
