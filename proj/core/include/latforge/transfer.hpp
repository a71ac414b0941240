#ifndef LATFORGE_TRANSFER_HPP
#define LATFORGE_TRANSFER_HPP

#include <array>
#include <optional>
#include <vector>

#include "latforge/lattice.hpp"
#include "latforge/partial.hpp"

namespace latforge {

// -- map predicates ----------------------------------------------------------

bool is_isotone(const FiniteLattice& k, const FiniteLattice& l, const std::vector<ElementId>& h);
bool is_join_hom(const FiniteLattice& k, const FiniteLattice& l, const std::vector<ElementId>& h);
bool is_meet_hom(const FiniteLattice& k, const FiniteLattice& l, const std::vector<ElementId>& h);
bool is_lattice_hom(const FiniteLattice& k, const FiniteLattice& l, const std::vector<ElementId>& h);
bool is_surjective(const FiniteLattice& l, const std::vector<ElementId>& h);
bool is_lattice_embedding(const FiniteLattice& k, const FiniteLattice& l, const std::vector<ElementId>& h);

// -- ideal maps and choice witnesses ------------------------------------------

/// phi : P -> Id L in finite form. Ideals of a finite lattice are principal,
/// so phi is stored as the element map x -> max phi(x); membership
/// "t in phi(x)" reads t <= phi[x].
using IdealMapVec = std::vector<ElementId>;

/// Is phi a homomorphism of partial lattices P -> Id L (finite stand-in)?
bool is_ideal_hom(const PartialLattice& p, const FiniteLattice& l, const IdealMapVec& phi);
/// Homomorphism plus order reflection.
bool is_ideal_embedding(const PartialLattice& p, const FiniteLattice& l, const IdealMapVec& phi);

struct ChoiceWitness {
  std::vector<ElementId> map;
  bool satisfies_transfer = false;
};

bool is_choice_for(const FiniteLattice& l, const std::vector<ElementId>& f, const IdealMapVec& phi);
/// f(x) in phi(y) implies x <= y.
bool transfer_condition(const PartialLattice& p, const FiniteLattice& l, const std::vector<ElementId>& f,
                        const IdealMapVec& phi);

// -- weak distributivity and pullbacks ----------------------------------------

struct WdReport {
  bool ok = true;
  ElementId x = 0, y0 = 0, y1 = 0;  // first counterexample, lexicographic
  explicit operator bool() const { return ok; }
};

/// h : K -> L must be a join-homomorphism (NotJoinHomError otherwise). Checks
/// that h(x) <= y0 v y1 always splits x below a join with images under the y_i.
WdReport weakly_distributive(const FiniteLattice& k, const FiniteLattice& l,
                             const std::vector<ElementId>& h);

struct Pullback {
  FiniteLattice lattice;                                // element i is points[i]
  std::vector<std::pair<ElementId, ElementId>> points;  // (x in P, y in L) with f(x) = h(y)
  std::vector<ElementId> to_p, to_l;                    // coordinate projections
};

/// The sublattice {(x, y) in P x L : f(x) = h(y)} with its projections.
/// f and h must be lattice homomorphisms into the same K.
Pullback pullback(const FiniteLattice& p, const FiniteLattice& k, const FiniteLattice& l,
                  const std::vector<ElementId>& f, const std::vector<ElementId>& h);

// -- choice floors and witness searches ---------------------------------------

/// The canonical choice floor of an ideal embedding: with o the first element
/// of phi(0_P) and a_{x,y} the first element of phi(x) outside phi(y) for each
/// x not below y, floor(x) = o v V a_{x,y}. Any choice homomorphism above it
/// satisfies the transfer condition. Throws NoWitnessError when phi fails to
/// separate some pair.
std::vector<ElementId> build_choice_floor(const PartialLattice& p, const FiniteLattice& l,
                                          const IdealMapVec& phi);

/// First (lexicographic) choice homomorphism f for phi with f >= floor and the
/// transfer condition, or none.
std::optional<ChoiceWitness> sharp_transfer_witness(const PartialLattice& p, const FiniteLattice& l,
                                                    const IdealMapVec& phi,
                                                    const std::vector<ElementId>* floor = nullptr);

/// First homomorphism f with f0 <= f <= phi pointwise, or none. Throws
/// BadFloorError when f0 is not a choice function for phi.
std::optional<std::vector<ElementId>> ideal_project_search(const PartialLattice& p, const FiniteLattice& l,
                                                           const IdealMapVec& phi,
                                                           const std::vector<ElementId>& f0);

// -- the two-square repair and its relatives -----------------------------------

struct D4Repair {
  ElementId astar0, astar1, bprime0, bprime1;
  /// Image of the catalog D4 (0, a0, a1, c, b0, b1, 1) in M.
  std::array<ElementId, 7> image;
};

/// Given a_i <= a'_i with b0 ^ b1 <= a0 v a1 in a lattice of the length-two
/// variety (NotInMomegaError otherwise), forms b'_i = b_i v a0 v a1 and
/// a*_i = a'_i ^ b'_0 ^ b'_1, for which a*_0 v a*_1 = b'_0 ^ b'_1. Requires
/// b'_0 ^ b'_1 <= a'_0 v a'_1 as well (PremiseViolatedError with the index of
/// the failing premise: 1 or 2 for a_i <= a'_i, 3 and 4 for the two meets).
D4Repair d4_repair(const FiniteLattice& m, ElementId a0, ElementId a1, ElementId b0, ElementId b1,
                   ElementId ap0, ElementId ap1);

/// Largest element not above the join-irreducible p of a finite distributive
/// lattice; p ^ p_dagger is p's unique lower cover.
ElementId p_dagger(const FiniteLattice& d, ElementId p);

struct RcmlResult {
  ChoiceWitness witness;
  std::vector<ElementId> irreducibles;  // p_1..p_m in the linear extension used
  std::vector<ElementId> separators;    // a_k below phi(p_k) but not phi(p_dagger)
  std::vector<ElementId> complements;   // b_k, independent over the origin
  ElementId origin;                     // o below phi(0_D)
};

/// The choice homomorphism of a finite distributive lattice into a relatively
/// complemented modular lattice along an ideal embedding phi: separators are
/// complemented against the join of their predecessors inside [o, a_k], and
/// f(x) joins the complements of the irreducibles below x. The result always
/// passes the homomorphism, choice and transfer checks.
RcmlResult rcml_choice_hom(const FiniteLattice& d, const FiniteLattice& m, const IdealMapVec& phi);

/// Lifts a quadruple with a0 v a1 = b0 ^ b1 through a surjective homomorphism
/// h : L -> K of relatively complemented lattices: returns (x0, x1, y0, y1)
/// with h(x_i) = a_i, h(y_i) = b_i and x0 v x1 = y0 ^ y1.
std::array<ElementId, 4> d4_lift_relcompl(const FiniteLattice& k, const FiniteLattice& l,
                                          const std::vector<ElementId>& h, ElementId a0, ElementId a1,
                                          ElementId b0, ElementId b1);

}  // namespace latforge

#endif
