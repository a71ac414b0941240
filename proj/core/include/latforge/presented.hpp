#ifndef LATFORGE_PRESENTED_HPP
#define LATFORGE_PRESENTED_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latforge/lattice.hpp"
#include "latforge/term.hpp"

namespace latforge {

/// Generators and inequality/equality relations between terms over them.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Atom> relations;
};

inline constexpr std::size_t kDefaultClosureCap = 200000;

/// The lattice presented inside the variety of a finite base lattice V:
/// coordinates are the solution tuples of the relations in V, generators
/// project coordinatewise, and the element set is the sublattice they
/// generate in the product of the per-coordinate generated sublattices.
///
/// The closure is size-capped. Hitting the cap is a first-class outcome:
/// the object stays usable for beta0 and omega queries, while element-set
/// accessors throw NotMaterializedError.
class PresentedLattice {
 public:
  using Tuple = std::vector<std::uint8_t>;  // one value per coordinate

  const FiniteLattice& base() const { return base_; }
  std::size_t generator_count() const { return gens_; }
  std::size_t coord_count() const { return omega_.size(); }

  /// Solution tuples, ascending lexicographically.
  const std::vector<std::vector<ElementId>>& omega() const { return omega_; }

  /// Generator i as a tuple over the coordinates.
  const Tuple& generator_vector(std::size_t i) const { return gen_vectors_[i]; }

  bool materialized() const { return materialized_; }
  std::size_t closure_reached() const { return closure_reached_; }
  std::size_t cap() const { return cap_; }

  std::size_t element_count() const;              // NotMaterializedError when capped
  Tuple element(std::size_t i) const;             // i-th element, insertion order
  std::optional<std::size_t> index_of(const Tuple& t) const;

  /// Bottom / top of the coordinate's generated sublattice.
  ElementId coord_bottom(std::size_t k) const { return coord_bottom_[k]; }
  ElementId coord_top(std::size_t k) const { return coord_top_[k]; }
  bool coord_contains(std::size_t k, ElementId v) const;

  Tuple product_top() const;
  Tuple product_bottom() const;
  /// The tuple with value t at coordinate k and the coordinate bottom elsewhere.
  Tuple scaled_point(std::size_t k, ElementId t) const;

  bool tuple_leq(const Tuple& a, const Tuple& b) const;
  Tuple tuple_meet(const Tuple& a, const Tuple& b) const;
  Tuple tuple_join(const Tuple& a, const Tuple& b) const;

  friend PresentedLattice presented_lattice(const FiniteLattice& v, const Presentation& pres,
                                            std::size_t cap, bool dedup_coordinates);

 private:
  FiniteLattice base_;
  std::size_t gens_ = 0;
  std::vector<std::vector<ElementId>> omega_;
  std::vector<Tuple> gen_vectors_;
  std::vector<ElementId> coord_bottom_, coord_top_;
  std::vector<std::vector<bool>> coord_member_;
  std::vector<std::uint8_t> arena_;  // element_count * coord_count bytes
  std::size_t count_ = 0;
  bool materialized_ = false;
  std::size_t closure_reached_ = 0;
  std::size_t cap_ = 0;
};

/// Builds the presented lattice by brute-force filtering of the relation
/// solutions and frontier closure of the generator vectors, stopping at `cap`.
PresentedLattice presented_lattice(const FiniteLattice& v, const Presentation& pres,
                                   std::size_t cap = kDefaultClosureCap, bool dedup_coordinates = true);

/// Solution tuples (x_0..x_m, y_0..y_m, u, v) over the pentagon: the x and y
/// blocks are chains, u ^ v <= x_0 v y_0, and
/// (u v x_k v y_k) ^ (v v x_k v y_k) <= x_{k+1} v y_{k+1} for k < m.
std::vector<std::vector<ElementId>> omega_m(std::size_t m);

/// Membership test for a single tuple, cheaper than scanning omega_m.
bool omega_m_contains(std::size_t m, const std::vector<ElementId>& z);

/// The presentation behind omega_m: generators a_0..a_m, b_0..b_m, c, d.
Presentation f_m_presentation(std::size_t m);

/// The presented lattice over the pentagon for that presentation.
PresentedLattice f_m(std::size_t m, std::size_t cap = kDefaultClosureCap);

/// Meet of all generator vectors above t; the product top when none is.
PresentedLattice::Tuple beta0(const PresentedLattice& f, const PresentedLattice::Tuple& t);

/// Least element of the presented lattice above t. NotMaterializedError when capped.
PresentedLattice::Tuple beta(const PresentedLattice& f, const PresentedLattice::Tuple& t);

/// Scans the materialized element set of f_m for f with
/// (f v c) ^ (f v d) = (f ^ a_m) v (f ^ b_m); first such element or none.
std::optional<PresentedLattice::Tuple> no_mid_search(const PresentedLattice& f, std::size_t m);

}  // namespace latforge

#endif
