#include "geogrow/rational.hpp"

#include <stdexcept>

namespace geogrow {

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = {};
    den_ = IntPolynomial{1};
    return;
  }
  IntPolynomial g = gcd(num, den);
  if (g.degree() > 0) {
    // g is primitive, so it divides over Z as well.
    num = divide_exact(num, g);
    den = divide_exact(den, g);
  }
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), num.content().get_mpz_t(), den.content().get_mpz_t());
  if (den[0] == 0) throw std::domain_error("rational function has a pole at t = 0");
  if (den[0] < 0) c = -c;
  num_ = num.divided_exactly(c);
  den_ = den.divided_exactly(c);
}

std::vector<mpz_class> RationalFunction::taylor(std::size_t k) const {
  // den * f = num, solved term by term.
  std::vector<mpz_class> out(k);
  const mpz_class d0 = den_[0];
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class acc = num_[i];
    const std::size_t lim = std::min<std::size_t>(i, den_.size() - 1);
    for (std::size_t j = 1; j <= lim; ++j) acc -= den_.coeffs()[j] * out[i - j];
    if (!mpz_divisible_p(acc.get_mpz_t(), d0.get_mpz_t()))
      throw std::domain_error("Taylor coefficients are not integral");
    mpz_divexact(out[i].get_mpz_t(), acc.get_mpz_t(), d0.get_mpz_t());
  }
  return out;
}

RationalFunction RationalFunction::shifted(std::size_t k) const {
  return RationalFunction(num_ * IntPolynomial::monomial(1, k), den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_ == IntPolynomial{1}) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

std::optional<std::size_t> first_difference(const RationalFunction& a, const RationalFunction& b, std::size_t k) {
  auto x = a.taylor(k);
  auto y = b.taylor(k);
  for (std::size_t i = 0; i < k; ++i)
    if (x[i] != y[i]) return i;
  return std::nullopt;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> out;
  // Only worth trying for modest constants.
  if (n == 0 || n > 1000000) return out;
  const unsigned long m = n.get_ui();
  for (unsigned long d = 1; d <= m; ++d)
    if (m % d == 0) out.emplace_back(d);
  return out;
}

}  // namespace

Factorization factor_with_hints(const IntPolynomial& p, const std::vector<IntPolynomial>& hints) {
  Factorization f;
  if (p.is_zero()) {
    f.unit = 0;
    return f;
  }
  f.unit = p.content();
  IntPolynomial rest = p.primitive_part();
  if (p.leading() < 0) f.unit = -f.unit;

  std::size_t low = 0;
  while (rest[low] == 0) ++low;
  if (low > 0) {
    rest = divide_exact(rest, IntPolynomial::monomial(1, low));
    f.factors.emplace_back(IntPolynomial{0, 1}, static_cast<int>(low));
  }

  auto pull = [&](const IntPolynomial& h) {
    int mult = 0;
    while (rest.degree() >= h.degree()) {
      try {
        rest = divide_exact(rest, h);
        ++mult;
      } catch (const std::domain_error&) {
        break;
      }
    }
    if (mult) f.factors.emplace_back(h, mult);
  };

  for (const auto& h : hints) {
    if (h.degree() < 1) continue;
    IntPolynomial hp = h.primitive_part();
    // Prefer the hint's own sign convention (constant term positive).
    if (hp[0] < 0) hp = -hp;
    pull(hp);
  }

  // Rational roots p/q: p | rest(0), q | lead; linear factor (q t - p) with
  // sign fixed so the constant term is positive.
  if (rest.degree() >= 1) {
    auto ps = positive_divisors(rest[0]);
    auto qs = positive_divisors(rest.leading());
    for (const auto& q : qs)
      for (const auto& pp : ps)
        for (int sign : {1, -1}) {
          mpz_class num = pp * sign;
          // Root num/q: q^d * rest(num/q) == 0
          mpz_class acc = 0, qpow = 1;
          const auto& c = rest.coeffs();
          std::vector<mpz_class> qp(c.size());
          for (std::size_t i = 0; i < c.size(); ++i) {
            qp[i] = qpow;
            qpow *= q;
          }
          mpz_class npow = 1;
          for (std::size_t i = 0; i < c.size(); ++i) {
            acc += c[i] * npow * qp[c.size() - 1 - i];
            npow *= num;
          }
          if (acc != 0) continue;
          IntPolynomial lin(std::vector<mpz_class>{-num, q});
          if (lin[0] < 0) lin = -lin;
          pull(lin);
          if (rest.degree() < 1) break;
        }
  }
  if (rest.degree() >= 1) {
    if (rest[0] < 0) {
      rest = -rest;
      f.unit = -f.unit;
    }
    f.factors.emplace_back(rest, 1);
  } else {
    f.unit *= rest[0];
  }
  return f;
}

IntPolynomial Factorization::expand() const {
  IntPolynomial r = IntPolynomial::constant(unit);
  for (const auto& [p, m] : factors)
    for (int i = 0; i < m; ++i) r = r * p;
  return r;
}

std::string Factorization::to_string(const std::string& var) const {
  std::string s;
  if (factors.empty()) return unit.get_str();
  if (unit == -1) s = "-";
  else if (unit != 1) s = unit.get_str() + "*";
  bool first = true;
  for (const auto& [p, m] : factors) {
    if (!first) s += "*";
    first = false;
    if (p == IntPolynomial{0, 1}) s += var;
    else s += "(" + p.to_string(var) + ")";
    if (m > 1) s += "^" + std::to_string(m);
  }
  return s;
}

std::string factored_string(const RationalFunction& f, const std::vector<IntPolynomial>& hints,
                            const std::string& var) {
  std::string num = factor_with_hints(f.numerator(), hints).to_string(var);
  if (f.denominator() == IntPolynomial{1}) return num;
  const Factorization den = factor_with_hints(f.denominator(), hints);
  const bool single = den.unit == 1 && den.factors.size() == 1 && den.factors[0].second == 1;
  return num + " / " + (single ? den.to_string(var) : "(" + den.to_string(var) + ")");
}

}  // namespace geogrow
