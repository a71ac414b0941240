#ifndef LATFORGE_IO_HPP
#define LATFORGE_IO_HPP

#include <string>
#include <variant>

#include "latforge/lattice.hpp"
#include "latforge/linear.hpp"
#include "latforge/partial.hpp"

namespace latforge {

/// {"n": int, "covers": [[lo,hi],...], "names": [str,...]?}; partial lattices
/// additionally carry "joins": [[[members],value],...] and "meets" likewise.
std::string to_json(const FiniteLattice& l);
std::string to_json(const PartialLattice& p);
/// {"q": int, "dim": int, "rows": [[int,...],...]} with the rows in reduced
/// row-echelon form.
std::string to_json(const Subspace& s);

/// Parses either plain-lattice or partial-lattice JSON. Throws ParseError on
/// malformed input; lattice construction errors propagate unchanged.
std::variant<FiniteLattice, PartialLattice> from_json(const std::string& text);
Subspace subspace_from_json(const std::string& text);

/// Hasse diagram: one edge per cover, elements ranked by height.
std::string to_dot(const FiniteLattice& l);

}  // namespace latforge

#endif
