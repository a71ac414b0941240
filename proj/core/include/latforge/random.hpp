#ifndef LATFORGE_RANDOM_HPP
#define LATFORGE_RANDOM_HPP

#include <random>
#include <vector>

#include "latforge/lattice.hpp"

namespace latforge {

/// A random lattice with at most `max_n` elements, drawn as the sublattice
/// generated by a random subset of a randomly chosen host lattice.
FiniteLattice random_lattice(std::mt19937_64& rng, std::size_t max_n);

struct Quotient {
  FiniteLattice lattice;
  std::vector<ElementId> map;  // the natural surjection
};

/// Quotient by the smallest lattice congruence collapsing a and b.
Quotient principal_congruence_quotient(const FiniteLattice& l, ElementId a, ElementId b);

/// Quotient by the congruence generated by a random pair (possibly trivial;
/// retried a few times to avoid the all-collapsing congruence when l allows).
Quotient random_quotient(std::mt19937_64& rng, const FiniteLattice& l);

}  // namespace latforge

#endif
