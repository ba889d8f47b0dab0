#pragma once

#include <cstddef>
#include <vector>

#include "geogrow/automaton.hpp"
#include "geogrow/rational.hpp"
#include "geogrow/spectral.hpp"

namespace geogrow {

/// f(r) = e_start^T M^r w for r = 0, 1, 2, ... Single consumer; each call to
/// next() applies M once to the internal state-count vector.
class CoefficientStream {
public:
  /// Throws InputError on a bad start index or weight vector length.
  CoefficientStream(const IntMatrix& m, std::size_t start, std::vector<mpz_class> weights);

  mpz_class next();
  std::vector<mpz_class> take(std::size_t k);
  std::size_t position() const noexcept { return position_; }
  std::size_t state_count() const noexcept { return counts_.size(); }

private:
  std::vector<std::vector<std::pair<std::size_t, mpz_class>>> successors_;
  std::vector<mpz_class> counts_;
  std::vector<mpz_class> weights_;
  std::size_t position_ = 0;
};

/// e_start^T adj(I - tM) w / det(I - tM), reduced. det(I - tM) is the
/// reversed characteristic polynomial of M; the numerator is the truncation
/// of det(I - tM) times the first n streamed coefficients.
RationalFunction rational_by_determinant(const IntMatrix& m, std::size_t start, const std::vector<mpz_class>& weights);

/// Minimal linear recurrence of the first 2n + 10 terms over Q, turned into
/// a reduced rational function. Throws std::logic_error if the recurrence is
/// longer than n or fails to reproduce the terms it was fitted on.
RationalFunction rational_by_berlekamp_massey(CoefficientStream& stream, std::size_t state_count);

/// Same as above on an explicit term sequence, with no order cap.
RationalFunction rational_from_terms(const std::vector<mpz_class>& terms);

enum class SeriesMethod { Determinant, BerlekampMassey };

/// The geodesic series of one right-angled Coxeter group and its
/// distinguished-letter variants, sharing one automaton.
class GrowthSeries {
public:
  /// Throws TriangleError for graphs with triangles.
  explicit GrowthSeries(const SimpleGraph& g, SeriesMethod method = SeriesMethod::Determinant);

  const GeodesicAutomaton& automaton() const noexcept { return automaton_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  SeriesMethod method() const noexcept { return method_; }

  /// Series of paths from `start` weighted by `weights`, by the configured method.
  RationalFunction series(std::size_t start, const std::vector<mpz_class>& weights) const;
  CoefficientStream stream(std::size_t start, const std::vector<mpz_class>& weights) const {
    return CoefficientStream(matrix_, start, weights);
  }

  /// All geodesics.
  RationalFunction full() const;
  /// Geodesics whose first letter is v: t times the series from state {v}.
  RationalFunction start_with(Vertex v) const;
  /// Geodesics whose last letter is v, counted as t times the paths from the
  /// start to states that v can leave. Cross-checked against start_with(v)
  /// for `check_terms` coefficients (reversal of a geodesic is geodesic);
  /// throws std::logic_error on a mismatch.
  RationalFunction end_with(Vertex v, std::size_t check_terms = 20) const;
  /// Geodesics starting and ending with v: t*alpha + t^2*beta, alpha the
  /// returns to {v}, beta the paths from {v} into end_states_for_letter(v).
  RationalFunction start_and_end_with(Vertex v) const;

  /// Coefficients f(0..k-1) of the full series, streamed.
  std::vector<mpz_class> coefficients(std::size_t k) const;
  /// Counts of geodesics of length 0..k-1 that start with v.
  std::vector<mpz_class> start_with_counts(Vertex v, std::size_t k) const;

private:
  std::vector<mpz_class> ones() const { return std::vector<mpz_class>(automaton_.state_count(), 1); }
  std::vector<mpz_class> indicator(const std::vector<int>& states) const;

  GeodesicAutomaton automaton_;
  IntMatrix matrix_;
  SeriesMethod method_;
};

RationalFunction geodesic_growth_series(const SimpleGraph& g, SeriesMethod method = SeriesMethod::Determinant);
RationalFunction start0_series(const SimpleGraph& g, Vertex v, SeriesMethod method = SeriesMethod::Determinant);
RationalFunction end0_series(const SimpleGraph& g, Vertex v, SeriesMethod method = SeriesMethod::Determinant);
RationalFunction both0_series(const SimpleGraph& g, Vertex v, SeriesMethod method = SeriesMethod::Determinant);

/// Spherical growth of the group from its clique counts:
///   1 / Sigma(t) = sum_i (-1)^i f_i (t / (1 + t))^i.
/// Works for any defining graph.
RationalFunction spherical_growth_series(const SimpleGraph& g);

}  // namespace geogrow
