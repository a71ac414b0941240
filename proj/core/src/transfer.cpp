#include "latforge/transfer.hpp"

#include <algorithm>

#include "latforge/term.hpp"

namespace latforge {

bool is_isotone(const FiniteLattice& k, const FiniteLattice& l, const std::vector<ElementId>& h) {
  if (h.size() != k.size()) return false;
  for (ElementId x = 0; x < k.size(); ++x)
    for (ElementId y = 0; y < k.size(); ++y)
      if (k.leq(x, y) && !l.leq(h[x], h[y])) return false;
  return true;
}

bool is_join_hom(const FiniteLattice& k, const FiniteLattice& l, const std::vector<ElementId>& h) {
  if (h.size() != k.size()) return false;
  for (ElementId x = 0; x < k.size(); ++x)
    for (ElementId y = 0; y < k.size(); ++y)
      if (h[k.join(x, y)] != l.join(h[x], h[y])) return false;
  return true;
}

bool is_meet_hom(const FiniteLattice& k, const FiniteLattice& l, const std::vector<ElementId>& h) {
  if (h.size() != k.size()) return false;
  for (ElementId x = 0; x < k.size(); ++x)
    for (ElementId y = 0; y < k.size(); ++y)
      if (h[k.meet(x, y)] != l.meet(h[x], h[y])) return false;
  return true;
}

bool is_lattice_hom(const FiniteLattice& k, const FiniteLattice& l, const std::vector<ElementId>& h) {
  return is_join_hom(k, l, h) && is_meet_hom(k, l, h);
}

bool is_surjective(const FiniteLattice& l, const std::vector<ElementId>& h) {
  std::vector<bool> hit(l.size(), false);
  for (ElementId v : h) {
    if (v >= l.size()) return false;
    hit[v] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_lattice_embedding(const FiniteLattice& k, const FiniteLattice& l, const std::vector<ElementId>& h) {
  if (!is_lattice_hom(k, l, h)) return false;
  for (ElementId x = 0; x < k.size(); ++x)
    for (ElementId y = 0; y < k.size(); ++y)
      if (l.leq(h[x], h[y]) && !k.leq(x, y)) return false;
  return true;
}

bool is_ideal_hom(const PartialLattice& p, const FiniteLattice& l, const IdealMapVec& phi) {
  return is_partial_hom(p, l, phi);
}

bool is_ideal_embedding(const PartialLattice& p, const FiniteLattice& l, const IdealMapVec& phi) {
  return is_partial_embedding(p, l, phi);
}

bool is_choice_for(const FiniteLattice& l, const std::vector<ElementId>& f, const IdealMapVec& phi) {
  if (f.size() != phi.size()) return false;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (!l.leq(f[x], phi[x])) return false;
  return true;
}

bool transfer_condition(const PartialLattice& p, const FiniteLattice& l, const std::vector<ElementId>& f,
                        const IdealMapVec& phi) {
  for (ElementId x = 0; x < p.size(); ++x)
    for (ElementId y = 0; y < p.size(); ++y)
      if (l.leq(f[x], phi[y]) && !p.leq(x, y)) return false;
  return true;
}

WdReport weakly_distributive(const FiniteLattice& k, const FiniteLattice& l,
                             const std::vector<ElementId>& h) {
  if (!is_join_hom(k, l, h)) throw NotJoinHomError();
  for (ElementId x = 0; x < k.size(); ++x)
    for (ElementId y0 = 0; y0 < l.size(); ++y0)
      for (ElementId y1 = 0; y1 < l.size(); ++y1) {
        if (!l.leq(h[x], l.join(y0, y1))) continue;
        bool split = false;
        for (ElementId x0 = 0; x0 < k.size() && !split; ++x0) {
          if (!l.leq(h[x0], y0)) continue;
          for (ElementId x1 = 0; x1 < k.size() && !split; ++x1)
            split = l.leq(h[x1], y1) && k.leq(x, k.join(x0, x1));
        }
        if (!split) return {false, x, y0, y1};
      }
  return {};
}

Pullback pullback(const FiniteLattice& p, const FiniteLattice& k, const FiniteLattice& l,
                  const std::vector<ElementId>& f, const std::vector<ElementId>& h) {
  if (!is_lattice_hom(p, k, f)) throw PreconditionFailedError("pullback: f is not a lattice homomorphism");
  if (!is_lattice_hom(l, k, h)) throw PreconditionFailedError("pullback: h is not a lattice homomorphism");
  Pullback out;
  for (ElementId x = 0; x < p.size(); ++x)
    for (ElementId y = 0; y < l.size(); ++y)
      if (f[x] == h[y]) out.points.emplace_back(x, y);
  if (out.points.empty()) throw LatticeError("pullback is empty");
  std::vector<std::string> names;
  names.reserve(out.points.size());
  for (auto [x, y] : out.points) {
    names.push_back("(" + p.name(x) + "," + l.name(y) + ")");
    out.to_p.push_back(x);
    out.to_l.push_back(y);
  }
  out.lattice = FiniteLattice::from_order(
      out.points.size(),
      [&](ElementId i, ElementId j) {
        return p.leq(out.points[i].first, out.points[j].first) &&
               l.leq(out.points[i].second, out.points[j].second);
      },
      std::move(names));
  return out;
}

std::vector<ElementId> build_choice_floor(const PartialLattice& p, const FiniteLattice& l,
                                          const IdealMapVec& phi) {
  if (phi.size() != p.size()) throw BadParamError("BadParam: phi has wrong size");
  auto bot = p.bottom();
  if (!bot) throw BadParamError("BadParam: source has no least element");
  ElementId o = l.size();
  for (ElementId t = 0; t < l.size(); ++t)
    if (l.leq(t, phi[*bot])) {
      o = t;
      break;
    }
  std::vector<ElementId> floor(p.size(), o);
  for (ElementId x = 0; x < p.size(); ++x) {
    ElementId acc = o;
    for (ElementId y = 0; y < p.size(); ++y) {
      if (p.leq(x, y)) continue;
      ElementId a = l.size();
      for (ElementId t = 0; t < l.size(); ++t)
        if (l.leq(t, phi[x]) && !l.leq(t, phi[y])) {
          a = t;
          break;
        }
      if (a == l.size())
        throw NoWitnessError("NoWitness: phi does not separate " + p.name(x) + " from " + p.name(y));
      acc = l.join(acc, a);
    }
    floor[x] = acc;
  }
  return floor;
}

std::optional<ChoiceWitness> sharp_transfer_witness(const PartialLattice& p, const FiniteLattice& l,
                                                    const IdealMapVec& phi,
                                                    const std::vector<ElementId>* floor) {
  if (!is_ideal_hom(p, l, phi))
    throw PreconditionFailedError("sharp_transfer_witness: phi is not a homomorphism");
  if (floor && floor->size() != p.size()) throw BadParamError("BadParam: floor has wrong size");
  HomSearchOptions opts;
  opts.floor = floor;
  opts.ceil = &phi;
  // the transfer condition is a per-element filter: f(x) may not drop into
  // phi(y) for any y not above x
  opts.unary = [&](ElementId x, ElementId v) {
    for (ElementId y = 0; y < p.size(); ++y)
      if (l.leq(v, phi[y]) && !p.leq(x, y)) return false;
    return true;
  };
  auto found = first_hom(p, l, opts);
  if (!found) return std::nullopt;
  ChoiceWitness w{std::move(found->map), true};
  if (!is_choice_for(l, w.map, phi) || !transfer_condition(p, l, w.map, phi))
    throw LatticeError("internal: witness failed re-verification");
  return w;
}

std::optional<std::vector<ElementId>> ideal_project_search(const PartialLattice& p, const FiniteLattice& l,
                                                           const IdealMapVec& phi,
                                                           const std::vector<ElementId>& f0) {
  if (!is_ideal_hom(p, l, phi)) throw PreconditionFailedError("ideal_project_search: phi is not a homomorphism");
  if (!is_choice_for(l, f0, phi)) throw BadFloorError("BadFloor: f0 is not a choice function for phi");
  HomSearchOptions opts;
  opts.floor = &f0;
  opts.ceil = &phi;
  auto found = first_hom(p, l, opts);
  if (!found) return std::nullopt;
  return std::move(found->map);
}

D4Repair d4_repair(const FiniteLattice& m, ElementId a0, ElementId a1, ElementId b0, ElementId b1,
                   ElementId ap0, ElementId ap1) {
  if (!in_momega(m)) throw NotInMomegaError();
  if (!m.leq(a0, ap0)) throw PremiseViolatedError(1);
  if (!m.leq(a1, ap1)) throw PremiseViolatedError(2);
  ElementId a = m.join(a0, a1);
  if (!m.leq(m.meet(b0, b1), a)) throw PremiseViolatedError(3);
  ElementId bp0 = m.join(b0, a);
  ElementId bp1 = m.join(b1, a);
  if (!m.leq(m.meet(bp0, bp1), m.join(ap0, ap1))) throw PremiseViolatedError(4);

  ElementId astar0 = m.meet(ap0, m.meet(bp0, bp1));
  ElementId astar1 = m.meet(ap1, m.meet(bp0, bp1));
  ElementId target = m.meet(bp0, bp1);
  if (m.join(astar0, astar1) != target)
    throw LatticeError("internal: repair failed inside the length-two variety");
  D4Repair out;
  out.astar0 = astar0;
  out.astar1 = astar1;
  out.bprime0 = bp0;
  out.bprime1 = bp1;
  out.image = {m.meet(astar0, astar1), astar0, astar1, target, bp0, bp1, m.join(bp0, bp1)};
  return out;
}

ElementId p_dagger(const FiniteLattice& d, ElementId p) {
  if (!is_distributive(d).ok) throw NotDistributiveError();
  if (d.lower_covers(p).size() != 1) throw NotJoinIrreducibleError();
  ElementId dag = d.bottom();
  for (ElementId t = 0; t < d.size(); ++t)
    if (!d.leq(p, t)) dag = d.join(dag, t);
  if (d.leq(p, dag)) throw LatticeError("internal: join of avoiders climbed above p");
  if (d.meet(p, dag) != d.lower_covers(p)[0])
    throw LatticeError("internal: p ^ p_dagger is not the lower cover");
  return dag;
}

RcmlResult rcml_choice_hom(const FiniteLattice& d, const FiniteLattice& m, const IdealMapVec& phi) {
  if (!is_distributive(d).ok) throw PreconditionFailedError("rcml: D is not distributive");
  if (!is_modular(m).ok) throw PreconditionFailedError("rcml: M is not modular");
  if (!is_relatively_complemented(m).ok)
    throw PreconditionFailedError("rcml: M is not relatively complemented");
  if (phi.size() != d.size() || !is_lattice_hom(d, m, phi) || !is_lattice_embedding(d, m, phi))
    throw PreconditionFailedError("rcml: phi is not a lattice embedding");

  // linear extension of the join-irreducibles by height
  std::vector<ElementId> ji = join_irreducibles(d);
  std::stable_sort(ji.begin(), ji.end(),
                   [&](ElementId a, ElementId b) { return d.height(a) < d.height(b); });

  // the principal generators themselves: o and the a_k are the tops of their
  // ideals, which an embedding keeps outside the avoiders' ideals
  ElementId o = phi[d.bottom()];

  const std::size_t count = ji.size();
  std::vector<ElementId> sep(count), comp(count), dagger(count);
  ElementId a_prev = o;  // join of the a_i seen so far, over o
  for (std::size_t k = 0; k < count; ++k) {
    ElementId p = ji[k];
    dagger[k] = p_dagger(d, p);
    ElementId a = phi[p];
    if (m.leq(a, phi[dagger[k]])) throw PreconditionFailedError("rcml: phi is not an embedding");
    sep[k] = a;
    ElementId pinch = m.meet(a, a_prev);
    auto complements = relative_complements(m, pinch, o, a);
    if (complements.empty()) throw LatticeError("NoRelativeComplement: interval is not complemented");
    comp[k] = complements.front();
    a_prev = m.join(a_prev, a);
  }

  std::vector<ElementId> f(d.size(), o);
  for (ElementId x = 0; x < d.size(); ++x) {
    ElementId acc = o;
    for (std::size_t k = 0; k < count; ++k)
      if (d.leq(ji[k], x)) acc = m.join(acc, comp[k]);
    f[x] = acc;
  }

  // the two claims of the construction
  for (std::size_t k = 0; k < count; ++k) {
    ElementId p = ji[k];
    ElementId pstar = d.lower_covers(p)[0];
    ElementId a_before = o;
    for (std::size_t i = 0; i < k; ++i) a_before = m.join(a_before, sep[i]);
    if (!m.leq(m.meet(sep[k], a_before), phi[pstar]))
      throw LatticeError("internal: pinch escaped the lower-cover ideal");
    if (!m.leq(comp[k], phi[p]) || m.leq(comp[k], phi[dagger[k]]))
      throw LatticeError("internal: complement left its separating ideal");
    ElementId b_before = o;
    for (std::size_t i = 0; i < k; ++i) b_before = m.join(b_before, comp[i]);
    if (m.meet(comp[k], b_before) != o) throw LatticeError("internal: complements not independent");
  }
  PartialLattice dp = as_partial(d);
  if (!is_lattice_hom(d, m, f)) throw LatticeError("internal: assembled map is not a homomorphism");
  if (!is_choice_for(m, f, phi)) throw LatticeError("internal: assembled map is not a choice");
  if (!transfer_condition(dp, m, f, phi)) throw LatticeError("internal: transfer condition failed");

  RcmlResult out;
  out.witness = {std::move(f), true};
  out.irreducibles = std::move(ji);
  out.separators = std::move(sep);
  out.complements = std::move(comp);
  out.origin = o;
  return out;
}

std::array<ElementId, 4> d4_lift_relcompl(const FiniteLattice& k, const FiniteLattice& l,
                                          const std::vector<ElementId>& h, ElementId a0, ElementId a1,
                                          ElementId b0, ElementId b1) {
  if (!is_relatively_complemented(k).ok)
    throw PreconditionFailedError("d4_lift: K is not relatively complemented");
  if (!is_relatively_complemented(l).ok)
    throw PreconditionFailedError("d4_lift: L is not relatively complemented");
  if (h.size() != l.size() || !is_lattice_hom(l, k, h))
    throw PreconditionFailedError("d4_lift: h is not a lattice homomorphism");
  if (!is_surjective(k, h)) throw PreconditionFailedError("d4_lift: h is not surjective");
  if (k.join(a0, a1) != k.meet(b0, b1)) throw PreconditionFailedError("d4_lift: a0 v a1 != b0 ^ b1");

  auto first_preimage = [&](ElementId target) {
    for (ElementId x = 0; x < l.size(); ++x)
      if (h[x] == target) return x;
    throw NotSurjectiveError();
  };
  ElementId u0 = first_preimage(a0);
  ElementId x1 = first_preimage(a1);
  ElementId y0 = first_preimage(b0);
  ElementId y1 = first_preimage(b1);
  ElementId lift = l.join(u0, x1);
  y0 = l.join(y0, lift);
  y1 = l.join(y1, lift);
  auto complements = relative_complements(l, lift, u0, l.meet(y0, y1));
  if (complements.empty()) throw LatticeError("NoRelativeComplement: interval is not complemented");
  ElementId x0 = complements.front();

  if (h[x0] != a0 || h[x1] != a1 || h[y0] != b0 || h[y1] != b1 ||
      l.join(x0, x1) != l.meet(y0, y1))
    throw LatticeError("internal: lifted quadruple failed its equations");
  return {x0, x1, y0, y1};
}

}  // namespace latforge
