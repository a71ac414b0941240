#include "latforge/window.hpp"

#include <algorithm>
#include <map>

#include "latforge/catalog.hpp"

namespace latforge {

std::optional<ElementId> WindowLattice::index_of(const std::vector<ElementId>& tuple) const {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), tuple);
  if (it == tuples.end() || *it != tuple) return std::nullopt;
  return ElementId(it - tuples.begin());
}

std::string WindowLattice::render(const std::vector<ElementId>& tuple) const {
  std::string s = "[";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += " ";
    s += base.name(tuple[i]);
  }
  return s + "]";
}

WindowLattice window_lattice(const FiniteLattice& l, const std::vector<ElementId>& convex, int half_width,
                             std::size_t cap) {
  if (half_width < 0) throw BadParamError("BadParam: negative half-width");
  std::vector<ElementId> c = convex;
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  if (c.empty()) throw NotConvexSublatticeError("NotConvexSublattice: empty set");
  std::vector<bool> in_c(l.size(), false);
  for (ElementId x : c) {
    if (x >= l.size()) throw BadParamError("BadParam: element out of range");
    in_c[x] = true;
  }
  for (ElementId x : c)
    for (ElementId y : c) {
      if (!in_c[l.meet(x, y)] || !in_c[l.join(x, y)])
        throw NotConvexSublatticeError("NotConvexSublattice: set is not closed under meet and join");
      for (ElementId z = 0; z < l.size(); ++z)
        if (l.leq(x, z) && l.leq(z, y) && !in_c[z])
          throw NotConvexSublatticeError("NotConvexSublattice: set is not convex");
    }

  WindowLattice w;
  w.base = l;
  w.convex = std::move(c);
  w.half_width = half_width;

  const std::size_t width = w.width();
  std::vector<ElementId> current(width);
  // depth-first over positions, values descending along the tuple
  std::function<void(std::size_t, bool)> rec = [&](std::size_t pos, bool met) {
    if (pos == width) {
      if (!met) return;
      if (w.tuples.size() + 1 > cap) throw CapExceededError(cap, w.tuples.size() + 1);
      w.tuples.push_back(current);
      return;
    }
    for (ElementId v = 0; v < l.size(); ++v) {
      if (pos > 0 && !l.leq(v, current[pos - 1])) continue;
      current[pos] = v;
      rec(pos + 1, met || in_c[v]);
    }
  };
  rec(0, false);
  std::sort(w.tuples.begin(), w.tuples.end());

  // closure re-check, then the order tables
  for (const auto& a : w.tuples)
    for (const auto& b : w.tuples) {
      std::vector<ElementId> m(width), j(width);
      for (std::size_t k = 0; k < width; ++k) {
        m[k] = l.meet(a[k], b[k]);
        j[k] = l.join(a[k], b[k]);
      }
      if (!std::binary_search(w.tuples.begin(), w.tuples.end(), m) ||
          !std::binary_search(w.tuples.begin(), w.tuples.end(), j))
        throw LatticeError("internal: window set is not closed");
    }

  std::vector<std::string> names;
  names.reserve(w.tuples.size());
  for (const auto& t : w.tuples) names.push_back(w.render(t));
  w.lattice = FiniteLattice::from_order(
      w.tuples.size(),
      [&](ElementId i, ElementId j) {
        for (std::size_t k = 0; k < width; ++k)
          if (!l.leq(w.tuples[i][k], w.tuples[j][k])) return false;
        return true;
      },
      std::move(names));
  return w;
}

WindowGenerators window_generators(const WindowLattice& w, int i, int n) {
  if (i != 0 && i != 1) throw BadParamError("BadParam: generator index must be 0 or 1");
  if (n < -w.half_width || n > w.half_width) throw IndexOutOfWindowError(n);
  const FiniteLattice& m33 = w.base;
  ElementId u = m33.by_name("u"), v = m33.by_name("v");
  ElementId ui = m33.by_name(i == 0 ? "u0" : "u1");
  ElementId vi = m33.by_name(i == 0 ? "v0" : "v1");
  ElementId zero = m33.by_name("0"), one = m33.by_name("1");

  WindowGenerators g;
  g.a.resize(w.width());
  g.b.resize(w.width());
  for (int k = -w.half_width; k <= w.half_width; ++k) {
    std::size_t idx = std::size_t(k + w.half_width);
    g.a[idx] = k <= n - 1 ? ui : (k == n ? u : zero);
    g.b[idx] = k <= n - 2 ? one : (k == n - 1 ? v : vi);
  }
  return g;
}

std::vector<std::array<ElementId, 4>> res_sys_solutions() {
  FiniteLattice m33 = make_m33();
  ElementId u = m33.by_name("u"), v = m33.by_name("v");
  std::vector<std::array<ElementId, 4>> out;
  for (ElementId x0 = 0; x0 < m33.size(); ++x0)
    for (ElementId x1 = 0; x1 < m33.size(); ++x1)
      for (ElementId y0 = 0; y0 < m33.size(); ++y0)
        for (ElementId y1 = 0; y1 < m33.size(); ++y1) {
          if (m33.join(x0, x1) != m33.meet(y0, y1)) continue;
          ElementId yj = m33.join(y0, y1);
          if (m33.join(x0, v) != yj || m33.join(x1, v) != yj) continue;
          ElementId xm = m33.meet(x0, x1);
          if (m33.meet(y0, u) != xm || m33.meet(y1, u) != xm) continue;
          out.push_back({x0, x1, y0, y1});
        }
  return out;
}

namespace {

struct NotpureSearch {
  const FiniteLattice& m33;
  int w;
  bool require_membership;
  std::vector<std::array<ElementId, 4>> res;
  ElementId u, v;
  std::vector<std::vector<std::array<ElementId, 4>>> candidates;  // per position
  std::vector<std::array<ElementId, 4>> chosen;

  bool value_can_still_meet(ElementId val) const { return m33.leq(u, val); }

  bool rec(std::size_t pos, std::array<bool, 4> met) {
    if (pos == std::size_t(2 * w + 1)) return met[0] && met[1] && met[2] && met[3];
    for (const auto& q : candidates[pos]) {
      if (pos > 0) {
        bool anti = true;
        for (int s = 0; s < 4 && anti; ++s) anti = m33.leq(q[std::size_t(s)], chosen[pos - 1][std::size_t(s)]);
        if (!anti) continue;
      }
      std::array<bool, 4> next_met = met;
      bool viable = true;
      for (int s = 0; s < 4 && viable; ++s) {
        ElementId val = q[std::size_t(s)];
        bool in_c = val == u || val == v;
        next_met[std::size_t(s)] = met[std::size_t(s)] || in_c;
        if (require_membership && !next_met[std::size_t(s)] && !value_can_still_meet(val))
          viable = false;  // everything later is below val, so {u, v} is out of reach
      }
      if (!viable) continue;
      chosen[pos] = q;
      if (rec(pos + 1, require_membership ? next_met : std::array<bool, 4>{true, true, true, true}))
        return true;
    }
    return false;
  }
};

std::vector<std::array<ElementId, 4>> position_candidates(const FiniteLattice& m33,
                                                          const std::vector<std::array<ElementId, 4>>& res,
                                                          const WindowGenerators& a0,
                                                          const WindowGenerators& a1,
                                                          const WindowGenerators& b0,
                                                          const WindowGenerators& b1, std::size_t idx) {
  std::vector<std::array<ElementId, 4>> out;
  for (const auto& q : res) {
    if (!m33.leq(a0.a[idx], q[0])) continue;
    if (!m33.leq(a1.a[idx], q[1])) continue;
    if (!m33.leq(b0.b[idx], q[2])) continue;
    if (!m33.leq(b1.b[idx], q[3])) continue;
    out.push_back(q);
  }
  return out;
}

}  // namespace

NotpureOutcome notpure_system_solve(int w, bool require_membership) {
  if (w < 1) throw BadParamError("BadParam: window half-width must be at least 1");
  FiniteLattice m33 = make_m33();
  WindowLattice win = window_lattice(m33, {m33.by_name("u"), m33.by_name("v")}, w);
  WindowGenerators a0 = window_generators(win, 0, 0);
  WindowGenerators a1 = window_generators(win, 1, 0);
  WindowGenerators b0 = window_generators(win, 0, 1);
  WindowGenerators b1 = window_generators(win, 1, 1);

  NotpureSearch search{m33, w, require_membership, res_sys_solutions(),
                       m33.by_name("u"), m33.by_name("v"), {}, {}};
  const std::size_t width = win.width();
  search.candidates.resize(width);
  for (std::size_t idx = 0; idx < width; ++idx)
    search.candidates[idx] = position_candidates(m33, search.res, a0, a1, b0, b1, idx);
  search.chosen.resize(width);

  NotpureOutcome out;
  if (search.rec(0, {false, false, false, false})) {
    out.found = true;
    for (int s = 0; s < 4; ++s) {
      out.solution[std::size_t(s)].resize(width);
      for (std::size_t idx = 0; idx < width; ++idx)
        out.solution[std::size_t(s)][idx] = search.chosen[idx][std::size_t(s)];
    }
  }
  return out;
}

std::vector<std::array<ElementId, 4>> notpure_pointwise_candidates(int w, int k) {
  if (w < 1) throw BadParamError("BadParam: window half-width must be at least 1");
  if (k < -w || k > w) throw IndexOutOfWindowError(k);
  FiniteLattice m33 = make_m33();
  WindowLattice win = window_lattice(m33, {m33.by_name("u"), m33.by_name("v")}, w);
  WindowGenerators a0 = window_generators(win, 0, 0);
  WindowGenerators a1 = window_generators(win, 1, 0);
  WindowGenerators b0 = window_generators(win, 0, 1);
  WindowGenerators b1 = window_generators(win, 1, 1);
  return position_candidates(m33, res_sys_solutions(), a0, a1, b0, b1, std::size_t(k + w));
}

}  // namespace latforge
