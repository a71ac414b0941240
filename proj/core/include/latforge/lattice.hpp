#ifndef LATFORGE_LATTICE_HPP
#define LATFORGE_LATTICE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latforge/errors.hpp"

namespace latforge {

/// Index of an element inside one FiniteLattice. Indices are only meaningful
/// relative to their lattice; ties everywhere are broken by ascending index.
using ElementId = std::uint16_t;

/// Interchange form: element count plus a list of (lower, upper) cover pairs.
struct CoverSpec {
  std::size_t n = 0;
  std::vector<std::pair<ElementId, ElementId>> covers;
  std::vector<std::string> names;  // optional, size n when present

  CoverSpec() = default;
  CoverSpec(std::size_t n, std::vector<std::pair<ElementId, ElementId>> covers,
            std::vector<std::string> names = {})
      : n(n), covers(std::move(covers)), names(std::move(names)) {}
};

/// A finite lattice on elements 0..n-1: packed order matrix plus dense
/// meet/join tables. Immutable after construction and cheap to query.
class FiniteLattice {
 public:
  /// An empty placeholder; use the factories for anything real.
  FiniteLattice() = default;

  /// Builds the lattice whose order is the reflexive-transitive closure of
  /// `spec.covers`. Throws CyclicCoversError or NotALatticeError.
  static FiniteLattice from_covers(const CoverSpec& spec);

  /// Builds from an arbitrary partial order given as a predicate on indices.
  /// The relation must already be reflexive, antisymmetric and transitive.
  template <typename Leq>
  static FiniteLattice from_order(std::size_t n, Leq&& leq, std::vector<std::string> names = {}) {
    std::vector<bool> rel(n * n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) rel[x * n + y] = leq(ElementId(x), ElementId(y));
    return from_order_matrix(n, rel, std::move(names));
  }

  static FiniteLattice from_order_matrix(std::size_t n, const std::vector<bool>& leq,
                                         std::vector<std::string> names = {});

  std::size_t size() const { return n_; }

  bool leq(ElementId x, ElementId y) const { return (up_[x * words_ + (y >> 6)] >> (y & 63)) & 1u; }
  bool lt(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  ElementId meet(ElementId x, ElementId y) const { return meet_[x * n_ + y]; }
  ElementId join(ElementId x, ElementId y) const { return join_[x * n_ + y]; }

  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }

  /// Packed bit row of everything above (resp. below) x, including x.
  std::span<const std::uint64_t> up_row(ElementId x) const { return {up_.data() + x * words_, words_}; }
  std::span<const std::uint64_t> down_row(ElementId x) const { return {down_.data() + x * words_, words_}; }
  std::size_t row_words() const { return words_; }

  bool covers(ElementId lo, ElementId hi) const;  // hi is an upper cover of lo
  std::vector<ElementId> upper_covers(ElementId x) const;
  std::vector<ElementId> lower_covers(ElementId x) const;
  /// All cover pairs (lo, hi), ascending lexicographically.
  std::vector<std::pair<ElementId, ElementId>> cover_pairs() const;
  CoverSpec to_cover_spec() const;

  std::size_t height(ElementId x) const { return height_[x]; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(ElementId x) const { return names_[x]; }
  /// Index of the element with the given label. Throws UnknownNameError.
  ElementId by_name(const std::string& name) const;

 private:
  void finish_tables();  // fills meet_/join_/bounds/heights from up_/down_

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> up_, down_;
  std::vector<ElementId> meet_, join_;
  std::vector<std::size_t> height_;
  ElementId bottom_ = 0, top_ = 0;
  std::vector<std::string> names_;
};

/// Result of an exhaustive property check: `ok`, or the first violating
/// tuple in ascending lexicographic order (layout documented per checker).
struct CheckResult {
  bool ok = true;
  std::vector<ElementId> witness;
  explicit operator bool() const { return ok; }
};

/// Modular law; witness = (x, y, z) with x <= z and x v (y ^ z) != (x v y) ^ z.
CheckResult is_modular(const FiniteLattice& l);
/// Distributive law; witness = (x, y, z).
CheckResult is_distributive(const FiniteLattice& l);
/// Join- and meet-semidistributivity; witness = (x, y, z) for the first
/// failing side (join side scanned first at each tuple).
CheckResult is_semidistributive(const FiniteLattice& l);
/// Whitman's condition; witness = (y0, y1, x0, x1) with
/// y0 ^ y1 <= x0 v x1 but no one-element witness on either side.
CheckResult satisfies_whitman(const FiniteLattice& l);

/// All y with x ^ y = a and x v y = b, ascending. Requires a <= x <= b.
std::vector<ElementId> relative_complements(const FiniteLattice& l, ElementId x, ElementId a, ElementId b);
/// True iff every a <= x <= b admits a relative complement; witness = (x, a, b).
CheckResult is_relatively_complemented(const FiniteLattice& l);

FiniteLattice dual(const FiniteLattice& l);
/// Direct product; element (x1, x2) gets index x1 * |l2| + x2.
FiniteLattice product(const FiniteLattice& l1, const FiniteLattice& l2);
/// The interval [a, b] reindexed by ascending element index. Throws BadIntervalError.
FiniteLattice interval(const FiniteLattice& l, ElementId a, ElementId b,
                       std::vector<ElementId>* embedding = nullptr);
/// Adds a fresh bottom (index 0) and top (index n+1); old x becomes x+1.
FiniteLattice bounds_extension(const FiniteLattice& l);

/// Least subset of `l` containing `seed` and closed under binary meet and
/// join. Throws CapExceededError when the closure would outgrow `cap`.
std::vector<ElementId> sublattice_closure(const FiniteLattice& l, const std::vector<ElementId>& seed,
                                          std::size_t cap = static_cast<std::size_t>(-1));

/// The sublattice on an explicitly closed element set, reindexed ascending.
/// `embedding[i]` is the index in `l` of the new element i.
FiniteLattice sublattice(const FiniteLattice& l, const std::vector<ElementId>& closed_set,
                         std::vector<ElementId>* embedding = nullptr);

/// Elements with exactly one lower cover, ascending.
std::vector<ElementId> join_irreducibles(const FiniteLattice& l);
/// x <= a v b implies x <= a or x <= b, checked exhaustively.
bool is_join_prime(const FiniteLattice& l, ElementId x);

struct DoublyReducible {
  ElementId c, a0, a1, b0, b1;  // c = a0 v a1 = b0 ^ b1, a_i < c < b_i
};
/// All doubly reducible elements, each with its lexicographically first witness.
std::vector<DoublyReducible> find_doubly_reducible(const FiniteLattice& l);

/// Backtracking search for an injection of `p` into `l` preserving meet and
/// join (hence order both ways). Returns the first embedding found.
std::optional<std::vector<ElementId>> has_sublattice_copy(const FiniteLattice& l, const FiniteLattice& p);
/// Up to `limit` distinct sublattice embeddings, in search order.
std::vector<std::vector<ElementId>> sublattice_embeddings(const FiniteLattice& l, const FiniteLattice& p,
                                                          std::size_t limit);

/// Isomorphism test by backtracking over degree/height signatures.
bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace latforge

#endif
