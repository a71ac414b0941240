#ifndef LATFORGE_PARTIAL_HPP
#define LATFORGE_PARTIAL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latforge/lattice.hpp"

namespace latforge {

/// One declared constraint: the join (or meet) of `members` equals `value`.
struct Constraint {
  std::vector<ElementId> members;  // nonempty, sorted ascending
  ElementId value = 0;
};

/// A poset with partially defined finite joins and meets. A total lattice is
/// identified with the partial lattice declaring every incomparable binary
/// meet and join (comparable pairs are forced by isotonicity already).
class PartialLattice {
 public:
  PartialLattice() = default;
  PartialLattice(std::size_t n, std::function<bool(ElementId, ElementId)> leq,
                 std::vector<Constraint> joins, std::vector<Constraint> meets,
                 std::vector<std::string> names = {});

  std::size_t size() const { return n_; }
  bool leq(ElementId x, ElementId y) const { return leq_[x * n_ + y]; }
  const std::vector<Constraint>& joins() const { return joins_; }
  const std::vector<Constraint>& meets() const { return meets_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(ElementId x) const { return names_[x]; }
  ElementId by_name(const std::string& name) const;

  /// Least element if one exists.
  std::optional<ElementId> bottom() const;
  std::optional<ElementId> top() const;

 private:
  std::size_t n_ = 0;
  std::vector<bool> leq_;
  std::vector<Constraint> joins_, meets_;
  std::vector<std::string> names_;
};

/// View a finite lattice as a partial lattice with every incomparable binary
/// join and meet declared.
PartialLattice as_partial(const FiniteLattice& l);

struct PartialViolation {
  bool join_side = false;
  ElementId value = 0;
  std::vector<ElementId> members;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::optional<PartialViolation> violation;
  explicit operator bool() const { return ok; }
};

/// Checks the two defining compatibility conditions of every declared
/// constraint against the poset; reports the first violation.
ValidationReport validate_partial(const PartialLattice& p);

/// The n-diamond: the n-cube plus an extra element e with a ^ e = 0 and
/// a v e = 1 for every atom a. diamond(1) is the three-element chain plus e.
PartialLattice diamond(std::size_t n);

/// Whitman's condition over the declared constraints of p: whenever a
/// declared meet lies below a declared join, some member witnesses it.
/// Witness layout on failure: the violating (meet constraint, join constraint)
/// indices are reported through `violation`.
struct WhitmanPartialReport {
  bool ok = true;
  std::size_t meet_index = 0, join_index = 0;  // indices into p.meets() / p.joins()
  explicit operator bool() const { return ok; }
};
WhitmanPartialReport whitman_partial(const PartialLattice& p);

/// A homomorphism of partial lattices into a finite lattice.
struct PartialHom {
  std::vector<ElementId> map;  // size = source element count
};

/// True iff `map` is isotone and sends every declared join/meet of p to the
/// corresponding join/meet in l.
bool is_partial_hom(const PartialLattice& p, const FiniteLattice& l, const std::vector<ElementId>& map);
/// Order-embedding on top of the homomorphism property.
bool is_partial_embedding(const PartialLattice& p, const FiniteLattice& l,
                          const std::vector<ElementId>& map);

struct HomSearchOptions {
  const std::vector<ElementId>* floor = nullptr;  // pointwise lower bound
  const std::vector<ElementId>* ceil = nullptr;   // pointwise upper bound
  bool require_embedding = false;
  /// Extra per-element admissibility filter on candidate images.
  std::function<bool(ElementId element, ElementId value)> unary;
};

/// Streams every homomorphism of partial lattices p -> l in lexicographic
/// order. The visitor returns false to stop the enumeration early.
void enumerate_homs(const PartialLattice& p, const FiniteLattice& l, const HomSearchOptions& opts,
                    const std::function<bool(const PartialHom&)>& visit);
std::vector<PartialHom> all_homs(const PartialLattice& p, const FiniteLattice& l,
                                 const HomSearchOptions& opts = {});
std::optional<PartialHom> first_hom(const PartialLattice& p, const FiniteLattice& l,
                                    const HomSearchOptions& opts = {});

/// For a surjective lattice homomorphism h : l -> k, the map sending each
/// element of k to the least element of its preimage. Throws
/// NotSurjectiveError, or NoMinimumError when a preimage has no least element.
std::vector<ElementId> lower_adjoint(const FiniteLattice& l, const FiniteLattice& k,
                                     const std::vector<ElementId>& h);

/// Lifts f : p -> k through the surjective lattice homomorphism h : l -> k,
/// returning g with h(g(x)) = f(x) and g >= lower_adjoint(h) . f. Requires p
/// to satisfy Whitman's condition (PreconditionWError otherwise). The ascent
/// repairs one violated meet constraint at a time, first declared first.
PartialHom davey_sands_lift(const PartialLattice& p, const FiniteLattice& k, const FiniteLattice& l,
                            const std::vector<ElementId>& h, const std::vector<ElementId>& f);

}  // namespace latforge

#endif
