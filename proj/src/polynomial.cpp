#include "geogrow/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace geogrow {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, std::size_t k) {
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPolynomial::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) { return *this = *this * o; }

IntPolynomial& IntPolynomial::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

IntPolynomial IntPolynomial::truncated(std::size_t n) const {
  if (n >= coeffs_.size()) return *this;
  return IntPolynomial(std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

IntPolynomial IntPolynomial::reversed(std::size_t n) const {
  if (degree() > static_cast<int>(n)) throw std::invalid_argument("reversed: degree exceeds n");
  std::vector<mpz_class> out(n + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[n - i] = coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::taylor_shift(const mpz_class& a) const {
  // Horner in the ring: p(t + a) = (...(c_d (t+a) + c_{d-1})(t+a) + ...)
  IntPolynomial result;
  const IntPolynomial lin(std::vector<mpz_class>{a, 1});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result = result * lin;
    result += constant(*it);
  }
  return result;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::divided_exactly(const mpz_class& c) const {
  IntPolynomial r = *this;
  for (auto& x : r.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw std::domain_error("divided_exactly: coefficient not divisible");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class c = content();
  if (leading() < 0) c = -c;
  return divided_exactly(c);
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("divide_exact: not divisible");
  std::vector<mpz_class> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<mpz_class> q(rem.size() - db);
  const mpz_class& lead = b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = rem[k + db];
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("divide_exact: not divisible");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q[k] * b.coeffs()[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("divide_exact: nonzero remainder");
  return IntPolynomial(std::move(q));
}

PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo_divide: division by zero polynomial");
  if (a.degree() < b.degree()) return {IntPolynomial{}, a, mpz_class(1)};
  std::vector<mpz_class> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<mpz_class> q(rem.size() - db);
  const mpz_class& lead = b.leading();
  mpz_class scale = 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    // Scale everything by lead so the next quotient digit is integral.
    if (rem[k + db] != 0 && !mpz_divisible_p(rem[k + db].get_mpz_t(), lead.get_mpz_t())) {
      for (auto& r : rem) r *= lead;
      for (auto& x : q) x *= lead;
      scale *= lead;
    }
    mpz_divexact(q[k].get_mpz_t(), rem[k + db].get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q[k] * b.coeffs()[j];
  }
  if (scale < 0) {
    scale = -scale;
    for (auto& r : rem) r = -r;
    for (auto& x : q) x = -x;
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(rem)), scale};
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  // Primitive PRS: coefficient growth stays bounded by the inputs.
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_divide(x, y).remainder.primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive_part();
}

IntPolynomial binomial_power(long c0, long c1, std::size_t k) {
  IntPolynomial base{c0, c1};
  IntPolynomial r{1};
  for (std::size_t i = 0; i < k; ++i) r = r * base;
  return r;
}

}  // namespace geogrow
