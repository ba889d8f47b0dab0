#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "geogrow/graph.hpp"
#include "geogrow/polynomial.hpp"

namespace geogrow {

/// Square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static IntMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  mpz_class& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  mpz_class trace() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<mpz_class> a_;
};

IntMatrix adjacency_matrix(const SimpleGraph& g);
/// D + A, the signless Laplacian.
IntMatrix signless_laplacian(const SimpleGraph& g);

/// det(xI - A) by Faddeev-LeVerrier in exact integer arithmetic. The 0x0
/// matrix has characteristic polynomial 1.
IntPolynomial char_poly(const IntMatrix& a);
IntPolynomial char_poly(const SimpleGraph& g);

/// Characteristic polynomial of L(g) computed from the signless Laplacian:
/// A(L(g)) = B^T B - 2I and B B^T = D + A, so
/// phi_{L(g)}(x) = (x + 2)^(m - n) * phi_Q(x + 2).
/// Avoids building the (often much larger) line graph.
IntPolynomial line_graph_char_poly(const SimpleGraph& g);

bool cospectral(const SimpleGraph& a, const SimpleGraph& b);

/// Both sides of McKay's coalescence identity
///   phi_{tau.s} = phi_tau phi_{s-r} + phi_{tau-r} phi_s - x phi_{tau-r} phi_{s-r}
/// where G-r deletes the root.
struct CoalescenceIdentity {
  IntPolynomial lhs;
  IntPolynomial rhs;
  bool holds() const { return lhs == rhs; }
};
CoalescenceIdentity coalescence_identity(const RootedTree& tau, const RootedTree& s);
bool coalescence_charpoly_identity(const RootedTree& tau, const RootedTree& s);

}  // namespace geogrow
