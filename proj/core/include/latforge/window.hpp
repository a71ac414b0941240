#ifndef LATFORGE_WINDOW_HPP
#define LATFORGE_WINDOW_HPP

#include <array>
#include <optional>
#include <vector>

#include "latforge/lattice.hpp"

namespace latforge {

/// All antitone tuples [-w, w] -> L whose range meets a convex sublattice C,
/// with componentwise operations. Closed under meet and join, so it carries a
/// FiniteLattice of its own; tuples[i] is the i-th element, lexicographic by
/// position -w first.
struct WindowLattice {
  FiniteLattice base;
  std::vector<ElementId> convex;
  int half_width = 0;
  std::vector<std::vector<ElementId>> tuples;
  FiniteLattice lattice;

  std::size_t width() const { return std::size_t(2 * half_width + 1); }
  std::optional<ElementId> index_of(const std::vector<ElementId>& tuple) const;
  std::string render(const std::vector<ElementId>& tuple) const;
};

/// Throws NotConvexSublatticeError when C is not a convex sublattice of l,
/// CapExceededError when the window grows past `cap`.
WindowLattice window_lattice(const FiniteLattice& l, const std::vector<ElementId>& convex, int half_width,
                             std::size_t cap = 1u << 20);

/// The two antitone generator patterns over a window on the stacked-diamond
/// lattice, restricted to [-w, w] (values continue their outer regime at the
/// edges):
///   a_{i,n}: u_i strictly left of n, u at n, 0 right of n;
///   b_{i,n}: 1 left of n-1, v at n-1, v_i from n on.
/// Throws IndexOutOfWindowError when |n| > w. The restrictions need not
/// belong to the window lattice for extreme n.
struct WindowGenerators {
  std::vector<ElementId> a, b;
};
WindowGenerators window_generators(const WindowLattice& w, int i, int n);

/// The eight solutions (x0, x1, y0, y1) of the residual system on the
/// stacked-diamond lattice:
///   x0 v x1 = y0 ^ y1,  x0 v v = x1 v v = y0 v y1,  y0 ^ u = y1 ^ u = x0 ^ x1.
std::vector<std::array<ElementId, 4>> res_sys_solutions();

struct NotpureOutcome {
  bool found = false;
  std::array<std::vector<ElementId>, 4> solution;  // x0, x1, y0, y1 as raw tuples
};

/// Searches W^4 (W the {u,v}-window of half-width w on the stacked-diamond
/// lattice) for a quadruple satisfying the residual system together with the
/// bounds a_{i,0} <= x_i and b_{i,1} <= y_i. Constraint propagation works
/// coordinatewise: each position must carry one of the eight residual
/// solutions, sequences must be antitone, and (unless `require_membership` is
/// false) every unknown's range must meet {u, v}.
NotpureOutcome notpure_system_solve(int w, bool require_membership = true);

/// Diagnostic: the residual solutions admissible at window position k (an
/// offset in [-w, w]) after the unary bound filters alone.
std::vector<std::array<ElementId, 4>> notpure_pointwise_candidates(int w, int k);

}  // namespace latforge

#endif
