#include <doctest.h>

#include <random>
#include <stdexcept>

#include "geogrow/polynomial.hpp"

using geogrow::IntPolynomial;

TEST_SUITE("polynomial") {
  TEST_CASE("construction trims and reports degree") {
    CHECK(IntPolynomial{}.degree() == -1);
    CHECK(IntPolynomial{0, 0, 0}.is_zero());
    CHECK(IntPolynomial{1, 2, 0}.degree() == 1);
    CHECK(IntPolynomial::monomial(3, 4) == IntPolynomial{0, 0, 0, 0, 3});
    CHECK(IntPolynomial{1, 2}[5] == 0);
  }

  TEST_CASE("to_string") {
    CHECK(IntPolynomial{1, -8, -85}.to_string() == "1 - 8*t - 85*t^2");
    CHECK(IntPolynomial{}.to_string() == "0");
    CHECK(IntPolynomial{0, 1}.to_string("x") == "x");
    CHECK(IntPolynomial{-1, 0, -1}.to_string() == "-1 - t^2");
  }

  TEST_CASE("arithmetic") {
    const IntPolynomial a{1, 1}, b{1, -1};
    CHECK(a * b == IntPolynomial{1, 0, -1});
    CHECK(a + b == IntPolynomial{2});
    CHECK(a - a == IntPolynomial{});
    CHECK(-a == IntPolynomial{-1, -1});
    CHECK(a * mpz_class(3) == IntPolynomial{3, 3});
  }

  TEST_CASE("reverse, truncate, shift, evaluate") {
    const IntPolynomial p{1, 2, 3};
    CHECK(p.reversed(2) == IntPolynomial{3, 2, 1});
    CHECK(p.reversed(4) == IntPolynomial{0, 0, 3, 2, 1});
    CHECK(p.truncated(2) == IntPolynomial{1, 2});
    CHECK(p.evaluate(2) == 17);
    // p(t + 1) = 6 + 8t + 3t^2
    CHECK(p.taylor_shift(1) == IntPolynomial{6, 8, 3});
    CHECK(p.taylor_shift(-1).taylor_shift(1) == p);
  }

  TEST_CASE("content and exact division") {
    const IntPolynomial p{6, -4, 10};
    CHECK(p.content() == 2);
    CHECK(p.primitive_part() == IntPolynomial{3, -2, 5});
    CHECK(IntPolynomial{}.content() == 0);
    CHECK(geogrow::divide_exact(IntPolynomial{1, 0, -1}, IntPolynomial{1, 1}) == IntPolynomial{1, -1});
    CHECK_THROWS_AS(geogrow::divide_exact(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1}), std::domain_error);
  }

  TEST_CASE("pseudo division identity") {
    const IntPolynomial a{3, 1, 4, 1, 5}, b{2, 7, 3};
    const auto d = geogrow::pseudo_divide(a, b);
    CHECK(a * d.scale == d.quotient * b + d.remainder);
    CHECK(d.remainder.degree() < b.degree());
  }

  TEST_CASE("gcd of products recovers the common factor") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
      IntPolynomial f{1, c(rng), c(rng)}, g{1, c(rng)}, h{1, c(rng), c(rng), c(rng)};
      const IntPolynomial d = geogrow::gcd(f * g, f * h);
      // d is a multiple of f's primitive part and divides both products.
      CHECK_NOTHROW(geogrow::divide_exact(f * g, d));
      CHECK_NOTHROW(geogrow::divide_exact(f * h, d));
      CHECK_NOTHROW(geogrow::divide_exact(d, f.primitive_part()));
    }
    CHECK(geogrow::gcd(IntPolynomial{1, 1}, IntPolynomial{1, -1}).degree() == 0);
  }

  TEST_CASE("binomial power") {
    CHECK(geogrow::binomial_power(1, 1, 3) == IntPolynomial{1, 3, 3, 1});
    CHECK(geogrow::binomial_power(2, -1, 0) == IntPolynomial{1});
  }
}
