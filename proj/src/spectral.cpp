#include "geogrow/spectral.hpp"

#include <stdexcept>

namespace geogrow {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

mpz_class IntMatrix::trace() const {
  mpz_class t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t n = a.n_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const mpz_class& x = a(i, l);
      if (x == 0) continue;
      if (x == 1) {
        for (std::size_t j = 0; j < n; ++j) c(i, j) += b(l, j);
      } else {
        for (std::size_t j = 0; j < n; ++j) c(i, j) += x * b(l, j);
      }
    }
  return c;
}

IntMatrix adjacency_matrix(const SimpleGraph& g) {
  IntMatrix m(static_cast<std::size_t>(g.order()));
  for (const Edge& e : g.edges()) {
    m(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)) = 1;
    m(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.u)) = 1;
  }
  return m;
}

IntMatrix signless_laplacian(const SimpleGraph& g) {
  IntMatrix m = adjacency_matrix(g);
  for (Vertex v = 0; v < g.order(); ++v) m(static_cast<std::size_t>(v), static_cast<std::size_t>(v)) = g.degree(v);
  return m;
}

IntPolynomial char_poly(const IntMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  // M_1 = I; c_{n-k} = -tr(A M_k) / k; M_{k+1} = A M_k + c_{n-k} I.
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix am = a * m;
    mpz_class tr = am.trace();
    mpz_class kk = static_cast<unsigned long>(k);
    if (!mpz_divisible_p(tr.get_mpz_t(), kk.get_mpz_t()))
      throw std::logic_error("Faddeev-LeVerrier: inexact trace division");
    mpz_divexact(c[n - k].get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -c[n - k];
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k];
    m = std::move(am);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial char_poly(const SimpleGraph& g) { return char_poly(adjacency_matrix(g)); }

IntPolynomial line_graph_char_poly(const SimpleGraph& g) {
  const long n = g.order();
  const long m = static_cast<long>(g.size());
  IntPolynomial q = char_poly(signless_laplacian(g)).taylor_shift(2);
  if (m >= n) return q * binomial_power(2, 1, static_cast<std::size_t>(m - n));
  return divide_exact(q, binomial_power(2, 1, static_cast<std::size_t>(n - m)));
}

bool cospectral(const SimpleGraph& a, const SimpleGraph& b) {
  return a.order() == b.order() && char_poly(a) == char_poly(b);
}

CoalescenceIdentity coalescence_identity(const RootedTree& tau, const RootedTree& s) {
  const IntPolynomial x{0, 1};
  const IntPolynomial p_tau = char_poly(tau.graph());
  const IntPolynomial p_s = char_poly(s.graph());
  const IntPolynomial p_tau0 = char_poly(delete_vertex(tau.graph(), tau.root()));
  const IntPolynomial p_s0 = char_poly(delete_vertex(s.graph(), s.root()));
  CoalescenceIdentity id;
  id.lhs = char_poly(coalesce(tau, s).graph());
  id.rhs = p_tau * p_s0 + p_tau0 * p_s - x * p_tau0 * p_s0;
  return id;
}

bool coalescence_charpoly_identity(const RootedTree& tau, const RootedTree& s) {
  return coalescence_identity(tau, s).holds();
}

}  // namespace geogrow
