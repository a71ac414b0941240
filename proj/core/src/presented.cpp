#include "latforge/presented.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

#include "latforge/catalog.hpp"

namespace latforge {

namespace {

std::uint64_t hash_bytes(const std::uint8_t* p, std::size_t len) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

bool PresentedLattice::coord_contains(std::size_t k, ElementId v) const { return coord_member_[k][v]; }

std::size_t PresentedLattice::element_count() const {
  if (!materialized_) throw NotMaterializedError();
  return count_;
}

PresentedLattice::Tuple PresentedLattice::element(std::size_t i) const {
  if (!materialized_) throw NotMaterializedError();
  const std::size_t c = coord_count();
  return Tuple(arena_.begin() + i * c, arena_.begin() + (i + 1) * c);
}

std::optional<std::size_t> PresentedLattice::index_of(const Tuple& t) const {
  if (!materialized_) throw NotMaterializedError();
  const std::size_t c = coord_count();
  for (std::size_t i = 0; i < count_; ++i)
    if (std::memcmp(arena_.data() + i * c, t.data(), c) == 0) return i;
  return std::nullopt;
}

PresentedLattice::Tuple PresentedLattice::product_top() const {
  Tuple t(coord_count());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = std::uint8_t(coord_top_[k]);
  return t;
}

PresentedLattice::Tuple PresentedLattice::product_bottom() const {
  Tuple t(coord_count());
  for (std::size_t k = 0; k < t.size(); ++k) t[k] = std::uint8_t(coord_bottom_[k]);
  return t;
}

PresentedLattice::Tuple PresentedLattice::scaled_point(std::size_t k, ElementId v) const {
  if (k >= coord_count()) throw BadParamError("BadParam: coordinate out of range");
  if (!coord_contains(k, v)) throw BadParamError("BadParam: value outside the coordinate sublattice");
  Tuple t = product_bottom();
  t[k] = std::uint8_t(v);
  return t;
}

bool PresentedLattice::tuple_leq(const Tuple& a, const Tuple& b) const {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!base_.leq(a[k], b[k])) return false;
  return true;
}

PresentedLattice::Tuple PresentedLattice::tuple_meet(const Tuple& a, const Tuple& b) const {
  Tuple t(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) t[k] = std::uint8_t(base_.meet(a[k], b[k]));
  return t;
}

PresentedLattice::Tuple PresentedLattice::tuple_join(const Tuple& a, const Tuple& b) const {
  Tuple t(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) t[k] = std::uint8_t(base_.join(a[k], b[k]));
  return t;
}

PresentedLattice presented_lattice(const FiniteLattice& v, const Presentation& pres, std::size_t cap,
                                   bool dedup_coordinates) {
  const std::size_t n = v.size();
  const std::size_t g = pres.generators.size();
  if (n > 255) throw BadParamError("BadParam: base lattice too large for tuple storage");
  if (g == 0) throw BadParamError("BadParam: presentation needs at least one generator");
  double combos = 1;
  for (std::size_t i = 0; i < g; ++i) combos *= double(n);
  if (combos > 2e8) throw BadParamError("BadParam: solution space too large to enumerate");

  PresentedLattice f;
  f.base_ = v;
  f.gens_ = g;
  f.cap_ = cap;

  // solution tuples of the relations, lexicographic order
  {
    std::vector<ElementId> z(g, 0);
    Assignment asg(g);
    for (std::size_t i = 0; i < g; ++i) asg[i].first = pres.generators[i];
    for (;;) {
      for (std::size_t i = 0; i < g; ++i) asg[i].second = z[i];
      bool ok = true;
      for (const Atom& rel : pres.relations) {
        ElementId a = eval_term(v, rel.lhs, asg);
        ElementId b = eval_term(v, rel.rhs, asg);
        if (rel.equality ? a != b : !v.leq(a, b)) {
          ok = false;
          break;
        }
      }
      if (ok) f.omega_.push_back(z);
      std::size_t i = g;
      while (i-- > 0) {
        if (++z[i] < n) break;
        z[i] = 0;
        if (i == 0) goto enumerated;
      }
    }
  enumerated:;
  }
  if (f.omega_.empty()) throw BadParamError("BadParam: relations have no solution in the base lattice");

  if (dedup_coordinates) {
    // identical projection columns induce identical projections of every
    // generated element, so merging them changes nothing up to isomorphism
    std::vector<std::vector<ElementId>> unique_cols;
    for (const auto& z : f.omega_)
      if (std::find(unique_cols.begin(), unique_cols.end(), z) == unique_cols.end())
        unique_cols.push_back(z);
    f.omega_ = std::move(unique_cols);
  }

  const std::size_t coords = f.omega_.size();
  f.gen_vectors_.assign(g, PresentedLattice::Tuple(coords));
  for (std::size_t k = 0; k < coords; ++k)
    for (std::size_t i = 0; i < g; ++i) f.gen_vectors_[i][k] = std::uint8_t(f.omega_[k][i]);

  f.coord_bottom_.resize(coords);
  f.coord_top_.resize(coords);
  f.coord_member_.assign(coords, std::vector<bool>(n, false));
  for (std::size_t k = 0; k < coords; ++k) {
    std::vector<ElementId> seed(f.omega_[k].begin(), f.omega_[k].end());
    std::vector<ElementId> cl = sublattice_closure(v, seed);
    ElementId bot = cl[0], top = cl[0];
    for (ElementId x : cl) {
      bot = v.meet(bot, x);
      top = v.join(top, x);
      f.coord_member_[k][x] = true;
    }
    f.coord_bottom_[k] = bot;
    f.coord_top_[k] = top;
  }

  // frontier closure under componentwise meet and join
  std::vector<ElementId> meet_tab(n * n), join_tab(n * n);
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      meet_tab[x * n + y] = v.meet(x, y);
      join_tab[x * n + y] = v.join(x, y);
    }

  auto& arena = f.arena_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
  std::size_t count = 0;
  bool capped = false;

  auto add = [&](const std::uint8_t* bytes) {
    std::uint64_t h = hash_bytes(bytes, coords);
    auto& bucket = buckets[h];
    for (std::uint32_t idx : bucket)
      if (std::memcmp(arena.data() + std::size_t(idx) * coords, bytes, coords) == 0) return;
    if (count + 1 > cap) {
      capped = true;
      return;
    }
    arena.insert(arena.end(), bytes, bytes + coords);
    bucket.push_back(std::uint32_t(count));
    ++count;
  };

  for (const auto& gv : f.gen_vectors_) add(gv.data());

  std::vector<std::uint8_t> m(coords), j(coords);
  std::size_t frontier_begin = 0;
  while (!capped && frontier_begin < count) {
    const std::size_t frontier_end = count;
    for (std::size_t a = frontier_begin; a < frontier_end && !capped; ++a) {
      for (std::size_t b = 0; b < frontier_end && !capped; ++b) {
        const std::uint8_t* pa = arena.data() + a * coords;
        const std::uint8_t* pb = arena.data() + b * coords;
        for (std::size_t k = 0; k < coords; ++k) {
          m[k] = std::uint8_t(meet_tab[pa[k] * n + pb[k]]);
          j[k] = std::uint8_t(join_tab[pa[k] * n + pb[k]]);
        }
        add(m.data());
        add(j.data());
      }
    }
    frontier_begin = frontier_end;
  }

  f.count_ = count;
  f.closure_reached_ = capped ? count + 1 : count;
  f.materialized_ = !capped;
  if (capped) {
    f.arena_.clear();
    f.arena_.shrink_to_fit();
    f.count_ = 0;
  }
  return f;
}

std::vector<std::vector<ElementId>> omega_m(std::size_t m) {
  PresentedLattice f = f_m(m, 1);  // cap 1: only the omega enumeration matters here
  return f.omega();
}

bool omega_m_contains(std::size_t m, const std::vector<ElementId>& z) {
  if (z.size() != 2 * m + 4) return false;
  FiniteLattice n5 = make_n5();
  for (ElementId x : z)
    if (x >= n5.size()) return false;
  for (std::size_t k = 0; k + 1 <= m; ++k) {
    if (!n5.leq(z[k], z[k + 1])) return false;                  // x chain
    if (!n5.leq(z[m + 1 + k], z[m + 2 + k])) return false;      // y chain
  }
  ElementId u = z[2 * m + 2], v = z[2 * m + 3];
  if (!n5.leq(n5.meet(u, v), n5.join(z[0], z[m + 1]))) return false;
  for (std::size_t k = 0; k < m; ++k) {
    ElementId lhs = n5.meet(n5.join(n5.join(u, z[k]), z[m + 1 + k]), n5.join(n5.join(v, z[k]), z[m + 1 + k]));
    if (!n5.leq(lhs, n5.join(z[k + 1], z[m + 2 + k]))) return false;
  }
  return true;
}

Presentation f_m_presentation(std::size_t m) {
  Presentation pres;
  auto aname = [](std::size_t k) { return "a" + std::to_string(k); };
  auto bname = [](std::size_t k) { return "b" + std::to_string(k); };
  for (std::size_t k = 0; k <= m; ++k) pres.generators.push_back(aname(k));
  for (std::size_t k = 0; k <= m; ++k) pres.generators.push_back(bname(k));
  pres.generators.push_back("c");
  pres.generators.push_back("d");

  for (std::size_t k = 0; k < m; ++k) {
    pres.relations.push_back({Term::var(aname(k)), Term::var(aname(k + 1)), false});
    pres.relations.push_back({Term::var(bname(k)), Term::var(bname(k + 1)), false});
  }
  pres.relations.push_back({Term::meet(Term::var("c"), Term::var("d")),
                            Term::join(Term::var(aname(0)), Term::var(bname(0))), false});
  for (std::size_t k = 0; k < m; ++k) {
    Term cab = Term::join({Term::var("c"), Term::var(aname(k)), Term::var(bname(k))});
    Term dab = Term::join({Term::var("d"), Term::var(aname(k)), Term::var(bname(k))});
    pres.relations.push_back({Term::meet(cab, dab),
                              Term::join(Term::var(aname(k + 1)), Term::var(bname(k + 1))), false});
  }
  return pres;
}

PresentedLattice f_m(std::size_t m, std::size_t cap) {
  return presented_lattice(make_n5(), f_m_presentation(m), cap);
}

PresentedLattice::Tuple beta0(const PresentedLattice& f, const PresentedLattice::Tuple& t) {
  if (t.size() != f.coord_count()) throw BadParamError("BadParam: tuple has wrong arity");
  for (std::size_t k = 0; k < t.size(); ++k)
    if (!f.coord_contains(k, t[k])) throw BadParamError("BadParam: value outside the coordinate sublattice");
  PresentedLattice::Tuple acc = f.product_top();
  for (std::size_t i = 0; i < f.generator_count(); ++i) {
    const auto& gv = f.generator_vector(i);
    if (f.tuple_leq(t, gv)) acc = f.tuple_meet(acc, gv);
  }
  return acc;
}

PresentedLattice::Tuple beta(const PresentedLattice& f, const PresentedLattice::Tuple& t) {
  if (t.size() != f.coord_count()) throw BadParamError("BadParam: tuple has wrong arity");
  const std::size_t count = f.element_count();
  PresentedLattice::Tuple acc = f.product_top();
  for (std::size_t i = 0; i < count; ++i) {
    PresentedLattice::Tuple e = f.element(i);
    if (f.tuple_leq(t, e)) acc = f.tuple_meet(acc, e);
  }
  return acc;
}

std::optional<PresentedLattice::Tuple> no_mid_search(const PresentedLattice& f, std::size_t m) {
  if (f.generator_count() != 2 * m + 4) throw BadParamError("BadParam: generator layout mismatch");
  const std::size_t count = f.element_count();
  const auto& am = f.generator_vector(m);
  const auto& bm = f.generator_vector(2 * m + 1);
  const auto& c = f.generator_vector(2 * m + 2);
  const auto& d = f.generator_vector(2 * m + 3);
  for (std::size_t i = 0; i < count; ++i) {
    PresentedLattice::Tuple e = f.element(i);
    PresentedLattice::Tuple lhs = f.tuple_meet(f.tuple_join(e, c), f.tuple_join(e, d));
    PresentedLattice::Tuple rhs = f.tuple_join(f.tuple_meet(e, am), f.tuple_meet(e, bm));
    if (lhs == rhs) return e;
  }
  return std::nullopt;
}

}  // namespace latforge
