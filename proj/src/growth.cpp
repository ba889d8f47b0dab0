#include "geogrow/growth.hpp"

#include <stdexcept>

#include "geogrow/errors.hpp"

namespace geogrow {

CoefficientStream::CoefficientStream(const IntMatrix& m, std::size_t start, std::vector<mpz_class> weights)
    : weights_(std::move(weights)) {
  const std::size_t n = m.dim();
  if (start >= n) throw InputError("start state " + std::to_string(start) + " out of range");
  if (weights_.size() != n)
    throw InputError("weight vector has length " + std::to_string(weights_.size()) + ", expected " +
                     std::to_string(n));
  successors_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0) successors_[i].emplace_back(j, m(i, j));
  counts_.assign(n, 0);
  counts_[start] = 1;
}

mpz_class CoefficientStream::next() {
  mpz_class f = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] != 0 && weights_[i] != 0) f += counts_[i] * weights_[i];
  std::vector<mpz_class> step(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    for (const auto& [j, mult] : successors_[i]) {
      if (mult == 1) step[j] += counts_[i];
      else step[j] += counts_[i] * mult;
    }
  }
  counts_ = std::move(step);
  ++position_;
  return f;
}

std::vector<mpz_class> CoefficientStream::take(std::size_t k) {
  std::vector<mpz_class> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(next());
  return out;
}

RationalFunction rational_by_determinant(const IntMatrix& m, std::size_t start, const std::vector<mpz_class>& weights) {
  const std::size_t n = m.dim();
  CoefficientStream s(m, start, weights);
  IntPolynomial den = char_poly(m).reversed(n);
  IntPolynomial head(s.take(n));
  return RationalFunction((den * head).truncated(n), den);
}

namespace {

// Berlekamp-Massey over Q. Returns the connection polynomial C (C[0] = 1)
// and the recurrence length L.
std::pair<std::vector<mpq_class>, std::size_t> berlekamp_massey(const std::vector<mpz_class>& s) {
  std::vector<mpq_class> c{1}, b{1};
  std::size_t len = 0, shift = 1;
  mpq_class last = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    mpq_class d = s[i];
    for (std::size_t j = 1; j <= len && j < c.size(); ++j) d += c[j] * s[i - j];
    if (d == 0) {
      ++shift;
      continue;
    }
    const mpq_class coef = d / last;
    std::vector<mpq_class> t = c;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift);
    for (std::size_t j = 0; j < b.size(); ++j) c[j + shift] -= coef * b[j];
    if (2 * len <= i) {
      len = i + 1 - len;
      b = std::move(t);
      last = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  c.resize(len + 1);
  return {c, len};
}

RationalFunction from_recurrence(const std::vector<mpz_class>& terms, const std::vector<mpq_class>& c, std::size_t len) {
  mpz_class scale = 1;
  for (const auto& x : c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> den(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpq_class v = c[i] * scale;
    den[i] = v.get_num();
  }
  IntPolynomial d(std::move(den));
  IntPolynomial head(std::vector<mpz_class>(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(std::min(len, terms.size()))));
  RationalFunction r((d * head).truncated(len), d);
  if (r.taylor(terms.size()) != terms)
    throw std::logic_error("Berlekamp-Massey: recurrence does not reproduce its input terms");
  return r;
}

}  // namespace

RationalFunction rational_from_terms(const std::vector<mpz_class>& terms) {
  auto [c, len] = berlekamp_massey(terms);
  return from_recurrence(terms, c, len);
}

RationalFunction rational_by_berlekamp_massey(CoefficientStream& stream, std::size_t state_count) {
  // 2n terms pin a recurrence of order <= n; ten more as a guard band.
  std::vector<mpz_class> terms = stream.take(2 * state_count + 10);
  auto [c, len] = berlekamp_massey(terms);
  if (len > state_count)
    throw std::logic_error("Berlekamp-Massey: recurrence order " + std::to_string(len) + " exceeds state count " +
                           std::to_string(state_count));
  return from_recurrence(terms, c, len);
}

GrowthSeries::GrowthSeries(const SimpleGraph& g, SeriesMethod method)
    : automaton_(g), matrix_(transition_matrix(automaton_)), method_(method) {}

RationalFunction GrowthSeries::series(std::size_t start, const std::vector<mpz_class>& weights) const {
  if (method_ == SeriesMethod::Determinant) return rational_by_determinant(matrix_, start, weights);
  CoefficientStream s(matrix_, start, weights);
  return rational_by_berlekamp_massey(s, matrix_.dim());
}

std::vector<mpz_class> GrowthSeries::indicator(const std::vector<int>& states) const {
  std::vector<mpz_class> w(automaton_.state_count(), 0);
  for (int q : states) w[static_cast<std::size_t>(q)] = 1;
  return w;
}

RationalFunction GrowthSeries::full() const { return series(GeodesicAutomaton::start(), ones()); }

RationalFunction GrowthSeries::start_with(Vertex v) const {
  const int q = automaton_.state_of_clique(Clique::vertex(v));
  return series(static_cast<std::size_t>(q), ones()).shifted(1);
}

RationalFunction GrowthSeries::end_with(Vertex v, std::size_t check_terms) const {
  if (!automaton_.graph().contains(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
  std::vector<int> leavable;
  for (int q = 0; q < static_cast<int>(automaton_.state_count()); ++q)
    if (automaton_.transition(q, v) != GeodesicAutomaton::kFail) leavable.push_back(q);
  RationalFunction ends = series(GeodesicAutomaton::start(), indicator(leavable)).shifted(1);
  if (ends.taylor(check_terms) != start_with(v).taylor(check_terms))
    throw std::logic_error("geodesics ending in " + std::to_string(v) + " do not match those starting with it");
  return ends;
}

RationalFunction GrowthSeries::start_and_end_with(Vertex v) const {
  const int q = automaton_.state_of_clique(Clique::vertex(v));
  const auto start = static_cast<std::size_t>(q);
  RationalFunction alpha = series(start, indicator({q}));
  RationalFunction beta = series(start, indicator(automaton_.end_states_for_letter(v)));
  return alpha.shifted(1) + beta.shifted(2);
}

std::vector<mpz_class> GrowthSeries::coefficients(std::size_t k) const {
  return stream(GeodesicAutomaton::start(), ones()).take(k);
}

std::vector<mpz_class> GrowthSeries::start_with_counts(Vertex v, std::size_t k) const {
  std::vector<mpz_class> out{0};
  if (k == 0) return {};
  const int q = automaton_.state_of_clique(Clique::vertex(v));
  auto rest = stream(static_cast<std::size_t>(q), ones()).take(k - 1);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

RationalFunction geodesic_growth_series(const SimpleGraph& g, SeriesMethod method) {
  return GrowthSeries(g, method).full();
}

RationalFunction start0_series(const SimpleGraph& g, Vertex v, SeriesMethod method) {
  return GrowthSeries(g, method).start_with(v);
}

RationalFunction end0_series(const SimpleGraph& g, Vertex v, SeriesMethod method) {
  return GrowthSeries(g, method).end_with(v);
}

RationalFunction both0_series(const SimpleGraph& g, Vertex v, SeriesMethod method) {
  return GrowthSeries(g, method).start_and_end_with(v);
}

RationalFunction spherical_growth_series(const SimpleGraph& g) {
  const IntPolynomial f = f_polynomial(g);
  const auto d = static_cast<std::size_t>(f.degree());
  // Clear (1 + t)^d from sum_i (-1)^i f_i t^i (1 + t)^(-i).
  IntPolynomial p;
  for (std::size_t i = 0; i <= d; ++i) {
    mpz_class c = f[i];
    if (i % 2) c = -c;
    p += IntPolynomial::monomial(c, i) * binomial_power(1, 1, d - i);
  }
  return RationalFunction(binomial_power(1, 1, d), p);
}

}  // namespace geogrow
