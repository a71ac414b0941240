#include "latforge/partial.hpp"

#include <algorithm>

#include "latforge/catalog.hpp"

namespace latforge {

PartialLattice::PartialLattice(std::size_t n, std::function<bool(ElementId, ElementId)> leq,
                               std::vector<Constraint> joins, std::vector<Constraint> meets,
                               std::vector<std::string> names)
    : n_(n), joins_(std::move(joins)), meets_(std::move(meets)), names_(std::move(names)) {
  if (n == 0) throw BadParamError("BadParam: empty partial lattice");
  leq_.assign(n * n, false);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) leq_[x * n + y] = leq(ElementId(x), ElementId(y));
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq_[x * n + x]) throw BadParamError("BadParam: order not reflexive");
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && leq_[x * n + y] && leq_[y * n + x])
        throw BadParamError("BadParam: order not antisymmetric");
      if (!leq_[x * n + y]) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (leq_[y * n + z] && !leq_[x * n + z]) throw BadParamError("BadParam: order not transitive");
    }
  }
  for (auto* side : {&joins_, &meets_})
    for (Constraint& c : *side) {
      if (c.members.empty()) throw BadParamError("BadParam: empty constraint");
      std::sort(c.members.begin(), c.members.end());
      c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
      for (ElementId m : c.members)
        if (m >= n) throw BadParamError("BadParam: constraint member out of range");
      if (c.value >= n) throw BadParamError("BadParam: constraint value out of range");
    }
  if (names_.empty()) {
    names_.resize(n);
    for (std::size_t i = 0; i < n; ++i) names_[i] = std::to_string(i);
  } else if (names_.size() != n) {
    throw BadParamError("BadParam: names list has wrong size");
  }
}

ElementId PartialLattice::by_name(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return ElementId(i);
  throw UnknownNameError(name);
}

std::optional<ElementId> PartialLattice::bottom() const {
  for (ElementId x = 0; x < n_; ++x) {
    bool least = true;
    for (ElementId y = 0; y < n_ && least; ++y) least = leq(x, y);
    if (least) return x;
  }
  return std::nullopt;
}

std::optional<ElementId> PartialLattice::top() const {
  for (ElementId x = 0; x < n_; ++x) {
    bool greatest = true;
    for (ElementId y = 0; y < n_ && greatest; ++y) greatest = leq(y, x);
    if (greatest) return x;
  }
  return std::nullopt;
}

PartialLattice as_partial(const FiniteLattice& l) {
  std::vector<Constraint> joins, meets;
  for (ElementId x = 0; x < l.size(); ++x)
    for (ElementId y = ElementId(x + 1); y < l.size(); ++y) {
      if (l.leq(x, y) || l.leq(y, x)) continue;  // forced by isotonicity
      joins.push_back({{x, y}, l.join(x, y)});
      meets.push_back({{x, y}, l.meet(x, y)});
    }
  return PartialLattice(
      l.size(), [&](ElementId x, ElementId y) { return l.leq(x, y); }, std::move(joins), std::move(meets),
      l.names());
}

ValidationReport validate_partial(const PartialLattice& p) {
  const std::size_t n = p.size();
  auto check = [&](const Constraint& c, bool join_side) -> bool {
    // join: up(value) must equal the intersection of the members' up-sets
    for (ElementId t = 0; t < n; ++t) {
      bool in_value = join_side ? p.leq(c.value, t) : p.leq(t, c.value);
      bool in_all = true;
      for (ElementId m : c.members) {
        bool above = join_side ? p.leq(m, t) : p.leq(t, m);
        if (!above) {
          in_all = false;
          break;
        }
      }
      if (in_value != in_all) return false;
    }
    return true;
  };
  for (const Constraint& c : p.joins())
    if (!check(c, true))
      return {false,
              PartialViolation{true, c.value, c.members, "declared join incompatible with the order"}};
  for (const Constraint& c : p.meets())
    if (!check(c, false))
      return {false,
              PartialViolation{false, c.value, c.members, "declared meet incompatible with the order"}};
  return {};
}

PartialLattice diamond(std::size_t n) {
  if (n == 0) throw BadParamError("BadParam: diamond needs n >= 1");
  if (n == 1) {
    // three-element chain 0 < a < 1 plus e, with a ^ e = 0 and a v e = 1
    std::vector<std::string> names = {"0", "a", "1", "e"};
    auto leq = [](ElementId x, ElementId y) {
      if (x == y || x == 0 || y == 2) return true;
      return x == 1 && y == 2;
    };
    return PartialLattice(4, leq, {{{1, 3}, 2}}, {{{1, 3}, 0}}, std::move(names));
  }
  FiniteLattice cube = make_boolean(n);
  const std::size_t cn = cube.size();
  const ElementId e = ElementId(cn);
  std::vector<Constraint> joins, meets;
  for (ElementId x = 0; x < cn; ++x)
    for (ElementId y = ElementId(x + 1); y < cn; ++y) {
      if (cube.leq(x, y) || cube.leq(y, x)) continue;
      joins.push_back({{x, y}, cube.join(x, y)});
      meets.push_back({{x, y}, cube.meet(x, y)});
    }
  for (std::size_t i = 0; i < n; ++i) {
    ElementId atom = ElementId(std::size_t(1) << i);
    joins.push_back({{atom, e}, cube.top()});
    meets.push_back({{atom, e}, cube.bottom()});
  }
  std::vector<std::string> names = cube.names();
  names.push_back("e");
  auto leq = [cn, &cube](ElementId x, ElementId y) {
    if (x == y) return true;
    if (x == cn) return y == cube.top();      // e <= 1 only
    if (y == cn) return x == cube.bottom();   // 0 <= e only
    return cube.leq(x, y);
  };
  return PartialLattice(cn + 1, leq, std::move(joins), std::move(meets), std::move(names));
}

WhitmanPartialReport whitman_partial(const PartialLattice& p) {
  for (std::size_t mi = 0; mi < p.meets().size(); ++mi) {
    const Constraint& mc = p.meets()[mi];
    for (std::size_t ji = 0; ji < p.joins().size(); ++ji) {
      const Constraint& jc = p.joins()[ji];
      if (!p.leq(mc.value, jc.value)) continue;
      bool witness = false;
      for (ElementId u : mc.members)
        if (p.leq(u, jc.value)) {
          witness = true;
          break;
        }
      for (ElementId v : jc.members)
        if (!witness && p.leq(mc.value, v)) witness = true;
      if (!witness) return {false, mi, ji};
    }
  }
  return {};
}

bool is_partial_hom(const PartialLattice& p, const FiniteLattice& l, const std::vector<ElementId>& map) {
  if (map.size() != p.size()) return false;
  for (ElementId x = 0; x < p.size(); ++x)
    for (ElementId y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && !l.leq(map[x], map[y])) return false;
  for (const Constraint& c : p.joins()) {
    ElementId acc = map[c.members[0]];
    for (std::size_t i = 1; i < c.members.size(); ++i) acc = l.join(acc, map[c.members[i]]);
    if (acc != map[c.value]) return false;
  }
  for (const Constraint& c : p.meets()) {
    ElementId acc = map[c.members[0]];
    for (std::size_t i = 1; i < c.members.size(); ++i) acc = l.meet(acc, map[c.members[i]]);
    if (acc != map[c.value]) return false;
  }
  return true;
}

bool is_partial_embedding(const PartialLattice& p, const FiniteLattice& l,
                          const std::vector<ElementId>& map) {
  if (!is_partial_hom(p, l, map)) return false;
  for (ElementId x = 0; x < p.size(); ++x)
    for (ElementId y = 0; y < p.size(); ++y)
      if (l.leq(map[x], map[y]) && !p.leq(x, y)) return false;
  return true;
}

namespace {

struct HomSearch {
  const PartialLattice& p;
  const FiniteLattice& l;
  const HomSearchOptions& opts;
  const std::function<bool(const PartialHom&)>& visit;
  std::vector<ElementId> f;
  bool stopped = false;

  bool consistent(std::size_t k, ElementId v) const {
    for (std::size_t j = 0; j < k; ++j) {
      if (p.leq(ElementId(j), ElementId(k)) && !l.leq(f[j], v)) return false;
      if (p.leq(ElementId(k), ElementId(j)) && !l.leq(v, f[j])) return false;
      if (opts.require_embedding) {
        if (l.leq(f[j], v) && !p.leq(ElementId(j), ElementId(k))) return false;
        if (l.leq(v, f[j]) && !p.leq(ElementId(k), ElementId(j))) return false;
      }
    }
    auto check_side = [&](const std::vector<Constraint>& side, bool join_side) {
      for (const Constraint& c : side) {
        if (c.value > k) continue;
        ElementId hi = c.members.back();
        if (hi > k) continue;  // some member unassigned; checked later
        if (c.value != k && std::find(c.members.begin(), c.members.end(), ElementId(k)) == c.members.end())
          continue;  // untouched by this assignment
        ElementId acc = (c.members[0] == k) ? v : f[c.members[0]];
        for (std::size_t i = 1; i < c.members.size(); ++i) {
          ElementId m = (c.members[i] == k) ? v : f[c.members[i]];
          acc = join_side ? l.join(acc, m) : l.meet(acc, m);
        }
        ElementId want = (c.value == k) ? v : f[c.value];
        if (acc != want) return false;
      }
      return true;
    };
    return check_side(p.joins(), true) && check_side(p.meets(), false);
  }

  void rec(std::size_t k) {
    if (stopped) return;
    if (k == p.size()) {
      if (!visit(PartialHom{f})) stopped = true;
      return;
    }
    ElementId lo = opts.floor ? (*opts.floor)[k] : ElementId(0);
    for (ElementId v = 0; v < l.size() && !stopped; ++v) {
      if (opts.floor && !l.leq(lo, v)) continue;
      if (opts.ceil && !l.leq(v, (*opts.ceil)[k])) continue;
      if (opts.unary && !opts.unary(ElementId(k), v)) continue;
      if (!consistent(k, v)) continue;
      f[k] = v;
      rec(k + 1);
    }
  }
};

}  // namespace

void enumerate_homs(const PartialLattice& p, const FiniteLattice& l, const HomSearchOptions& opts,
                    const std::function<bool(const PartialHom&)>& visit) {
  if (opts.floor && opts.floor->size() != p.size()) throw BadParamError("BadParam: floor has wrong size");
  if (opts.ceil && opts.ceil->size() != p.size()) throw BadParamError("BadParam: ceiling has wrong size");
  HomSearch search{p, l, opts, visit, std::vector<ElementId>(p.size(), 0)};
  search.rec(0);
}

std::vector<PartialHom> all_homs(const PartialLattice& p, const FiniteLattice& l,
                                 const HomSearchOptions& opts) {
  std::vector<PartialHom> out;
  enumerate_homs(p, l, opts, [&](const PartialHom& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

std::optional<PartialHom> first_hom(const PartialLattice& p, const FiniteLattice& l,
                                    const HomSearchOptions& opts) {
  std::optional<PartialHom> out;
  enumerate_homs(p, l, opts, [&](const PartialHom& h) {
    out = h;
    return false;
  });
  return out;
}

std::vector<ElementId> lower_adjoint(const FiniteLattice& l, const FiniteLattice& k,
                                     const std::vector<ElementId>& h) {
  if (h.size() != l.size()) throw BadParamError("BadParam: map has wrong size");
  std::vector<ElementId> beta(k.size(), 0);
  for (ElementId y = 0; y < k.size(); ++y) {
    bool seen = false;
    ElementId acc = 0;
    for (ElementId x = 0; x < l.size(); ++x) {
      if (h[x] != y) continue;
      acc = seen ? l.meet(acc, x) : x;
      seen = true;
    }
    if (!seen) throw NotSurjectiveError();
    if (h[acc] != y) throw NoMinimumError("NoMinimum: preimage of " + k.name(y) + " has no least element");
    beta[y] = acc;
  }
  return beta;
}

PartialHom davey_sands_lift(const PartialLattice& p, const FiniteLattice& k, const FiniteLattice& l,
                            const std::vector<ElementId>& h, const std::vector<ElementId>& f) {
  if (!whitman_partial(p)) throw PreconditionWError();
  if (f.size() != p.size()) throw BadParamError("BadParam: f has wrong size");
  std::vector<ElementId> beta = lower_adjoint(l, k, h);
  std::vector<ElementId> g(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) g[x] = beta[f[x]];

  for (;;) {
    const Constraint* violated = nullptr;
    ElementId e = 0;
    for (const Constraint& c : p.meets()) {
      ElementId acc = g[c.members[0]];
      for (std::size_t i = 1; i < c.members.size(); ++i) acc = l.meet(acc, g[c.members[i]]);
      if (acc != g[c.value]) {
        violated = &c;
        e = acc;
        break;
      }
    }
    if (!violated) break;
    for (ElementId x = 0; x < p.size(); ++x)
      if (p.leq(violated->value, x)) g[x] = l.join(g[x], e);
  }

  // Whitman's condition keeps every declared join intact along the ascent.
  if (!is_partial_hom(p, l, g)) throw LatticeError("internal: lift is not a homomorphism");
  for (std::size_t x = 0; x < p.size(); ++x)
    if (h[g[x]] != f[x]) throw LatticeError("internal: lift does not factor the map");
  return PartialHom{std::move(g)};
}

}  // namespace latforge
