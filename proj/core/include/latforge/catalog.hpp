#ifndef LATFORGE_CATALOG_HPP
#define LATFORGE_CATALOG_HPP

#include <optional>
#include <string>
#include <variant>

#include "latforge/lattice.hpp"
#include "latforge/partial.hpp"

namespace latforge {

/// Named lattices with fixed labelings.
///
///   D4       0 < a0,a1 < c < b0,b1 < 1, with c = a0 v a1 = b0 ^ b1
///   D4hat    same, with c split into a covering pair c0 < c1
///   N5       chain 0 < p1 < p2 < 1 plus p3 incomparable to p1, p2
///   M n      length-two lattice with n >= 3 atoms q1..qn
///   M33      two length-two diamonds stacked: [0,v] has atoms v0,v1,u and
///            [u,1] has atoms u0,u1,v
///   B n      powerset of an n-set, elements indexed by bitmask
///   chain k  k-element chain
///   P n      the n-diamond (a partial lattice)
///
/// Throws UnknownNameError / BadParamError.
std::variant<FiniteLattice, PartialLattice> catalog(const std::string& name,
                                                    std::optional<int> param = std::nullopt);

/// catalog() restricted to total lattices; throws BadParamError for P n.
FiniteLattice catalog_lattice(const std::string& name, std::optional<int> param = std::nullopt);

/// Parses compact names like "M33", "N5", "D4hat", "B3", "M_4", "P_3",
/// "chain_5" and returns the catalog entry.
std::variant<FiniteLattice, PartialLattice> catalog_by_name(const std::string& token);

FiniteLattice make_chain(std::size_t k);
FiniteLattice make_boolean(std::size_t n);
FiniteLattice make_m(std::size_t atoms);  // BadParamError when atoms < 3
FiniteLattice make_n5();
FiniteLattice make_d4();
FiniteLattice make_d4hat();
FiniteLattice make_m33();

}  // namespace latforge

#endif
