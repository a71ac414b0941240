#ifndef LATFORGE_LINEAR_HPP
#define LATFORGE_LINEAR_HPP

#include <cstdint>
#include <vector>

#include "latforge/lattice.hpp"

namespace latforge {

/// A subspace of GF(q)^n held in reduced row-echelon form with zero rows
/// dropped, which makes the representation canonical: two subspaces are equal
/// iff their matrices are identical.
class Subspace {
 public:
  /// The zero subspace of GF(q)^n. q must be prime.
  Subspace(int q, int ambient_dim);
  /// Row space of the given matrix (any basis presentation; rows are reduced).
  Subspace(int q, int ambient_dim, const std::vector<std::vector<int>>& rows);

  int q() const { return q_; }
  int ambient_dim() const { return ambient_; }
  int dim() const { return int(rows_.size()); }
  const std::vector<std::vector<std::uint8_t>>& rows() const { return rows_; }

  bool contains(const std::vector<std::uint8_t>& vec) const;

  bool operator==(const Subspace& other) const = default;

  static Subspace full(int q, int ambient_dim);
  /// Span of a list of coordinate vectors.
  static Subspace span(int q, int ambient_dim, const std::vector<std::vector<int>>& vectors);

 private:
  int q_ = 2;
  int ambient_ = 0;
  std::vector<std::vector<std::uint8_t>> rows_;

  friend Subspace sum(const Subspace&, const Subspace&);
  friend Subspace intersect(const Subspace&, const Subspace&);
};

/// X + Y; throws FieldMismatchError / DimensionMismatchError.
Subspace sum(const Subspace& x, const Subspace& y);
/// X intersected with Y, via the Zassenhaus double-block elimination.
Subspace intersect(const Subspace& x, const Subspace& y);
bool leq(const Subspace& x, const Subspace& y);

/// All subspaces of GF(q)^n with the lattice of inclusion. Elements are
/// ordered by (dimension, lexicographic rows), so index order extends order.
struct SubspaceLattice {
  int q = 2;
  int n = 0;
  std::vector<Subspace> elements;
  FiniteLattice lattice;
};

/// Enumerates every reduced row-echelon form. Throws CapExceededError when the
/// subspace count would exceed `cap`, and BadParamError unless q is prime.
SubspaceLattice full_subspace_lattice(int q, int n, std::size_t cap = 1u << 20);

/// Number of subspaces of GF(q)^n (the Gaussian binomial sum).
std::uint64_t subspace_count(int q, int n);

/// A relative complement of X in [A, B]: Y with X ^ Y = A and X + Y = B,
/// built by basis extension. Requires A <= X <= B (BadIntervalError).
Subspace relative_complement_linear(const Subspace& x, const Subspace& a, const Subspace& b);

/// The two interleaved families of subspaces of GF(q)^(2N) spanned by basis
/// vectors a_0..a_{N-1}, b_0..b_{N-1} (coordinates 0..N-1 and N..2N-1):
///   A_n = <a_0..a_n>, B_n = <b_0..b_n>,
///   C_0 = <a_0+b_0, a_1+b_1+a_0, a_2+b_2+a_1, ...>,
///   D_0 = <a_0+b_0, a_1+b_1, a_2+b_2, ...>,
///   C_{n+1} = C_0 + A_n + B_n,  D_{n+1} = D_0 + A_n + B_n,
/// with all generating sequences cut at index N-1. Valid index range is
/// 0 <= n <= N-2 (IndexOutOfTruncationError beyond).
class CdFamily {
 public:
  CdFamily(int big_n, int q);

  int truncation() const { return n_; }
  int q() const { return q_; }

  Subspace a(int n) const;
  Subspace b(int n) const;
  Subspace c(int n) const;
  Subspace d(int n) const;

  /// <a_0, b_0, ..., a_{n-1}, b_{n-1}, a_n + b_n>, the expected value of
  /// intersect(c(n), d(n)).
  Subspace expected_cd_intersection(int n) const;

 private:
  void check(int n) const;
  int n_ = 0;
  int q_ = 2;
  Subspace c0_, d0_;
};

}  // namespace latforge

#endif
