#include "latforge/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>
#include <numeric>

namespace latforge {

namespace {

inline bool get_bit(const std::uint64_t* row, std::size_t i) { return (row[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(std::uint64_t* row, std::size_t i) { row[i >> 6] |= std::uint64_t(1) << (i & 63); }

inline std::size_t popcount_row(const std::uint64_t* row, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words; ++w) c += std::size_t(std::popcount(row[w]));
  return c;
}

// B subseteq A?
inline bool subset_row(const std::uint64_t* b, const std::uint64_t* a, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w)
    if (b[w] & ~a[w]) return false;
  return true;
}

}  // namespace

ElementId FiniteLattice::by_name(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return ElementId(i);
  throw UnknownNameError(name);
}

bool FiniteLattice::covers(ElementId lo, ElementId hi) const {
  if (lo == hi || !leq(lo, hi)) return false;
  // exactly {lo, hi} between them
  const std::uint64_t* u = up_.data() + lo * words_;
  const std::uint64_t* d = down_.data() + hi * words_;
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w) c += std::size_t(std::popcount(u[w] & d[w]));
  return c == 2;
}

std::vector<ElementId> FiniteLattice::upper_covers(ElementId x) const {
  std::vector<ElementId> out;
  for (std::size_t y = 0; y < n_; ++y)
    if (covers(x, ElementId(y))) out.push_back(ElementId(y));
  return out;
}

std::vector<ElementId> FiniteLattice::lower_covers(ElementId x) const {
  std::vector<ElementId> out;
  for (std::size_t y = 0; y < n_; ++y)
    if (covers(ElementId(y), x)) out.push_back(ElementId(y));
  return out;
}

std::vector<std::pair<ElementId, ElementId>> FiniteLattice::cover_pairs() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (covers(ElementId(x), ElementId(y))) out.emplace_back(ElementId(x), ElementId(y));
  return out;
}

CoverSpec FiniteLattice::to_cover_spec() const { return CoverSpec(n_, cover_pairs(), names_); }

void FiniteLattice::finish_tables() {
  const std::size_t n = n_, words = words_;

  // Sort by down-set size: strictly smaller elements have strictly smaller
  // down-sets, so this is a linear extension of the order.
  std::vector<ElementId> topo(n);
  std::iota(topo.begin(), topo.end(), ElementId(0));
  std::vector<std::size_t> dsize(n);
  for (std::size_t x = 0; x < n; ++x) dsize[x] = popcount_row(down_.data() + x * words, words);
  std::stable_sort(topo.begin(), topo.end(), [&](ElementId a, ElementId b) { return dsize[a] < dsize[b]; });
  std::vector<ElementId> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[topo[i]] = ElementId(i);

  // Order matrices in topo space; the first set bit of an upper-bound set is
  // then its candidate minimum.
  std::vector<std::uint64_t> up_t(n * words, 0), down_t(n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t* src_u = up_.data() + topo[i] * words;
    const std::uint64_t* src_d = down_.data() + topo[i] * words;
    for (std::size_t y = 0; y < n; ++y) {
      if (get_bit(src_u, y)) set_bit(up_t.data() + i * words, pos[y]);
      if (get_bit(src_d, y)) set_bit(down_t.data() + i * words, pos[y]);
    }
  }

  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  std::vector<std::uint64_t> buf(words);
  bool failed = false;
  ElementId fail_x = 0, fail_y = 0;
  bool fail_join = false;

  auto bound = [&](std::size_t i, std::size_t j, bool join_side) -> int {
    const std::uint64_t* a = (join_side ? up_t : down_t).data() + i * words;
    const std::uint64_t* b = (join_side ? up_t : down_t).data() + j * words;
    for (std::size_t w = 0; w < words; ++w) buf[w] = a[w] & b[w];
    int m = -1;
    if (join_side) {
      for (std::size_t w = 0; w < words && m < 0; ++w)
        if (buf[w]) m = int(w * 64 + std::size_t(std::countr_zero(buf[w])));
    } else {
      for (std::size_t w = words; w-- > 0 && m < 0;)
        if (buf[w]) m = int(w * 64 + 63 - std::size_t(std::countl_zero(buf[w])));
    }
    if (m < 0) return -1;
    // the candidate must bound everything in buf
    const std::uint64_t* mr = (join_side ? up_t : down_t).data() + std::size_t(m) * words;
    if (!subset_row(buf.data(), mr, words)) return -1;
    return m;
  };

  for (std::size_t i = 0; i < n && !failed; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      int lub = bound(i, j, true);
      int glb = bound(i, j, false);
      if (lub < 0 || glb < 0) {
        failed = true;
        fail_x = topo[i];
        fail_y = topo[j];
        fail_join = lub < 0;
        break;
      }
      ElementId x = topo[i], y = topo[j], jn = topo[std::size_t(lub)], mt = topo[std::size_t(glb)];
      join_[x * n + y] = jn;
      join_[y * n + x] = jn;
      meet_[x * n + y] = mt;
      meet_[y * n + x] = mt;
    }
  }
  if (failed) {
    // rescan in original index order so the reported pair is deterministic
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x; y < n; ++y) {
        if (bound(pos[x], pos[y], true) < 0) throw NotALatticeError(ElementId(x), ElementId(y), true);
        if (bound(pos[x], pos[y], false) < 0) throw NotALatticeError(ElementId(x), ElementId(y), false);
      }
    throw NotALatticeError(fail_x, fail_y, fail_join);  // unreachable
  }

  bottom_ = topo[0];
  top_ = topo[n - 1];

  height_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ElementId x = topo[i];
    std::size_t h = 0;
    for (std::size_t j = 0; j < i; ++j) {
      ElementId y = topo[j];
      if (y != x && leq(y, x)) h = std::max(h, height_[y] + 1);
    }
    height_[x] = h;
  }
}

FiniteLattice FiniteLattice::from_order_matrix(std::size_t n, const std::vector<bool>& leq,
                                               std::vector<std::string> names) {
  if (n == 0) throw BadParamError("BadParam: a lattice needs at least one element");
  if (n > 4096) throw BadParamError("BadParam: element count exceeds the supported table size");
  if (leq.size() != n * n) throw BadParamError("BadParam: order matrix has wrong size");
  if (!names.empty() && names.size() != n) throw BadParamError("BadParam: names list has wrong size");

  FiniteLattice l;
  l.n_ = n;
  l.words_ = (n + 63) / 64;
  l.up_.assign(n * l.words_, 0);
  l.down_.assign(n * l.words_, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq[x * n + x]) throw BadParamError("BadParam: order not reflexive");
    for (std::size_t y = 0; y < n; ++y)
      if (leq[x * n + y]) {
        if (x != y && leq[y * n + x]) throw BadParamError("BadParam: order not antisymmetric");
        set_bit(l.up_.data() + x * l.words_, y);
        set_bit(l.down_.data() + y * l.words_, x);
      }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y && leq[x * n + y] &&
          !subset_row(l.up_.data() + y * l.words_, l.up_.data() + x * l.words_, l.words_))
        throw BadParamError("BadParam: order not transitive");

  l.names_ = std::move(names);
  if (l.names_.empty()) {
    l.names_.resize(n);
    for (std::size_t i = 0; i < n; ++i) l.names_[i] = std::to_string(i);
  }
  l.finish_tables();
  return l;
}

FiniteLattice FiniteLattice::from_covers(const CoverSpec& spec) {
  const std::size_t n = spec.n;
  if (n == 0) throw BadParamError("BadParam: a lattice needs at least one element");
  if (n > 4096) throw BadParamError("BadParam: element count exceeds the supported table size");
  std::vector<std::vector<ElementId>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [lo, hi] : spec.covers) {
    if (lo >= n || hi >= n) throw BadParamError("BadParam: cover endpoint out of range");
    if (lo == hi) throw CyclicCoversError();
    succ[lo].push_back(hi);
    ++indeg[hi];
  }

  std::vector<ElementId> order;
  order.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    if (indeg[x] == 0) order.push_back(ElementId(x));
  for (std::size_t head = 0; head < order.size(); ++head)
    for (ElementId y : succ[order[head]])
      if (--indeg[y] == 0) order.push_back(y);
  if (order.size() != n) throw CyclicCoversError();

  FiniteLattice l;
  l.n_ = n;
  l.words_ = (n + 63) / 64;
  l.up_.assign(n * l.words_, 0);
  // up-sets by DP against topological order, processed top-down
  for (std::size_t i = n; i-- > 0;) {
    ElementId x = order[i];
    std::uint64_t* row = l.up_.data() + x * l.words_;
    set_bit(row, x);
    for (ElementId y : succ[x]) {
      const std::uint64_t* ry = l.up_.data() + y * l.words_;
      for (std::size_t w = 0; w < l.words_; ++w) row[w] |= ry[w];
    }
  }
  l.down_.assign(n * l.words_, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (get_bit(l.up_.data() + x * l.words_, y)) set_bit(l.down_.data() + y * l.words_, x);

  l.names_ = spec.names;
  if (l.names_.empty()) {
    l.names_.resize(n);
    for (std::size_t i = 0; i < n; ++i) l.names_[i] = std::to_string(i);
  } else if (l.names_.size() != n) {
    throw BadParamError("BadParam: names list has wrong size");
  }
  l.finish_tables();
  return l;
}

CheckResult is_modular(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z) {
        if (!l.leq(x, z)) continue;
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) return {false, {x, y, z}};
      }
  return {};
}

CheckResult is_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return {false, {x, y, z}};
  return {};
}

CheckResult is_semidistributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      for (ElementId z = 0; z < n; ++z) {
        if (l.join(x, z) == l.join(y, z) && l.join(x, z) != l.join(l.meet(x, y), z))
          return {false, {x, y, z}};
        if (l.meet(x, z) == l.meet(y, z) && l.meet(x, z) != l.meet(l.join(x, y), z))
          return {false, {x, y, z}};
      }
  return {};
}

CheckResult satisfies_whitman(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (ElementId y0 = 0; y0 < n; ++y0)
    for (ElementId y1 = 0; y1 < n; ++y1) {
      ElementId m = l.meet(y0, y1);
      for (ElementId x0 = 0; x0 < n; ++x0)
        for (ElementId x1 = 0; x1 < n; ++x1) {
          ElementId j = l.join(x0, x1);
          if (!l.leq(m, j)) continue;
          if (l.leq(y0, j) || l.leq(y1, j) || l.leq(m, x0) || l.leq(m, x1)) continue;
          return {false, {y0, y1, x0, x1}};
        }
    }
  return {};
}

std::vector<ElementId> relative_complements(const FiniteLattice& l, ElementId x, ElementId a, ElementId b) {
  if (!(l.leq(a, x) && l.leq(x, b))) throw BadIntervalError("BadInterval: need a <= x <= b");
  std::vector<ElementId> out;
  for (ElementId y = 0; y < l.size(); ++y)
    if (l.meet(x, y) == a && l.join(x, y) == b) out.push_back(y);
  return out;
}

CheckResult is_relatively_complemented(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (ElementId x = 0; x < n; ++x)
    for (ElementId a = 0; a < n; ++a) {
      if (!l.leq(a, x)) continue;
      for (ElementId b = 0; b < n; ++b) {
        if (!l.leq(x, b)) continue;
        bool found = false;
        for (ElementId y = 0; y < n && !found; ++y) found = l.meet(x, y) == a && l.join(x, y) == b;
        if (!found) return {false, {x, a, b}};
      }
    }
  return {};
}

FiniteLattice dual(const FiniteLattice& l) {
  return FiniteLattice::from_order(l.size(), [&](ElementId x, ElementId y) { return l.leq(y, x); },
                                   l.names());
}

FiniteLattice product(const FiniteLattice& l1, const FiniteLattice& l2) {
  const std::size_t n1 = l1.size(), n2 = l2.size();
  std::vector<std::string> names(n1 * n2);
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t y = 0; y < n2; ++y) names[x * n2 + y] = "(" + l1.name(ElementId(x)) + "," + l2.name(ElementId(y)) + ")";
  return FiniteLattice::from_order(
      n1 * n2,
      [&](ElementId a, ElementId b) {
        return l1.leq(ElementId(a / n2), ElementId(b / n2)) && l2.leq(ElementId(a % n2), ElementId(b % n2));
      },
      std::move(names));
}

FiniteLattice sublattice(const FiniteLattice& l, const std::vector<ElementId>& closed_set,
                         std::vector<ElementId>* embedding) {
  std::vector<ElementId> elems = closed_set;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) throw BadParamError("BadParam: empty sublattice");
  for (ElementId x : elems)
    for (ElementId y : elems) {
      if (!std::binary_search(elems.begin(), elems.end(), l.meet(x, y)) ||
          !std::binary_search(elems.begin(), elems.end(), l.join(x, y)))
        throw BadParamError("BadParam: element set is not closed under meet and join");
    }
  std::vector<std::string> names;
  names.reserve(elems.size());
  for (ElementId x : elems) names.push_back(l.name(x));
  if (embedding) *embedding = elems;
  return FiniteLattice::from_order(
      elems.size(), [&](ElementId i, ElementId j) { return l.leq(elems[i], elems[j]); }, std::move(names));
}

FiniteLattice interval(const FiniteLattice& l, ElementId a, ElementId b, std::vector<ElementId>* embedding) {
  if (!l.leq(a, b)) throw BadIntervalError("BadInterval: need a <= b");
  std::vector<ElementId> elems;
  for (ElementId x = 0; x < l.size(); ++x)
    if (l.leq(a, x) && l.leq(x, b)) elems.push_back(x);
  return sublattice(l, elems, embedding);
}

FiniteLattice bounds_extension(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::string> names(n + 2);
  names[0] = "0*";
  names[n + 1] = "1*";
  for (std::size_t i = 0; i < n; ++i) names[i + 1] = l.name(ElementId(i));
  return FiniteLattice::from_order(
      n + 2,
      [&](ElementId x, ElementId y) {
        if (x == y || x == 0 || y == n + 1) return true;
        if (y == 0 || x == n + 1) return false;
        return l.leq(ElementId(x - 1), ElementId(y - 1));
      },
      std::move(names));
}

std::vector<ElementId> sublattice_closure(const FiniteLattice& l, const std::vector<ElementId>& seed,
                                          std::size_t cap) {
  if (seed.empty()) throw BadParamError("BadParam: closure of an empty set");
  std::vector<bool> in(l.size(), false);
  std::vector<ElementId> members;
  auto push = [&](ElementId x) {
    if (!in[x]) {
      if (members.size() + 1 > cap) throw CapExceededError(cap, members.size() + 1);
      in[x] = true;
      members.push_back(x);
    }
  };
  for (ElementId x : seed) push(x);
  for (std::size_t head = 0; head < members.size(); ++head) {
    ElementId x = members[head];
    for (std::size_t i = 0; i <= head; ++i) {
      push(l.meet(x, members[i]));
      push(l.join(x, members[i]));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<ElementId> join_irreducibles(const FiniteLattice& l) {
  std::vector<ElementId> out;
  for (ElementId x = 0; x < l.size(); ++x)
    if (l.lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

bool is_join_prime(const FiniteLattice& l, ElementId x) {
  for (ElementId a = 0; a < l.size(); ++a)
    for (ElementId b = 0; b < l.size(); ++b)
      if (l.leq(x, l.join(a, b)) && !l.leq(x, a) && !l.leq(x, b)) return false;
  return true;
}

std::vector<DoublyReducible> find_doubly_reducible(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<DoublyReducible> out;
  for (ElementId c = 0; c < n; ++c) {
    int a0 = -1, a1 = -1;
    for (ElementId i = 0; i < n && a0 < 0; ++i)
      for (ElementId j = i + 1; j < n && a0 < 0; ++j)
        if (l.lt(i, c) && l.lt(j, c) && l.join(i, j) == c) {
          a0 = i;
          a1 = j;
        }
    if (a0 < 0) continue;
    int b0 = -1, b1 = -1;
    for (ElementId i = 0; i < n && b0 < 0; ++i)
      for (ElementId j = i + 1; j < n && b0 < 0; ++j)
        if (l.lt(c, i) && l.lt(c, j) && l.meet(i, j) == c) {
          b0 = i;
          b1 = j;
        }
    if (b0 < 0) continue;
    out.push_back({c, ElementId(a0), ElementId(a1), ElementId(b0), ElementId(b1)});
  }
  return out;
}

namespace {

// Backtracking injections of p into l preserving meet and join.
bool embed_rec(const FiniteLattice& l, const FiniteLattice& p, std::vector<ElementId>& f, std::size_t k,
               std::vector<bool>& used, const std::function<bool(const std::vector<ElementId>&)>& emit) {
  if (k == p.size()) return emit(f);
  for (ElementId v = 0; v < l.size(); ++v) {
    if (used[v]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      ElementId pj = ElementId(j);
      ok = (p.leq(pj, ElementId(k)) == l.leq(f[j], v)) && (p.leq(ElementId(k), pj) == l.leq(v, f[j]));
    }
    // operation tables on every pair that is now fully assigned
    for (std::size_t i = 0; i <= k && ok; ++i)
      for (std::size_t j = i; j <= k && ok; ++j) {
        if (i != k && j != k) {
          // only pairs whose meet or join is the fresh element still matter
          ElementId m = p.meet(ElementId(i), ElementId(j)), jn = p.join(ElementId(i), ElementId(j));
          if (m == k) ok = l.meet(f[i], f[j]) == v;
          if (ok && jn == k) ok = l.join(f[i], f[j]) == v;
          continue;
        }
        ElementId fi = (i == k) ? v : f[i];
        ElementId fj = (j == k) ? v : f[j];
        ElementId m = p.meet(ElementId(i), ElementId(j)), jn = p.join(ElementId(i), ElementId(j));
        if (m <= k) ok = l.meet(fi, fj) == ((m == k) ? v : f[m]);
        if (ok && jn <= k) ok = l.join(fi, fj) == ((jn == k) ? v : f[jn]);
      }
    if (!ok) continue;
    f[k] = v;
    used[v] = true;
    if (!embed_rec(l, p, f, k + 1, used, emit)) return false;
    used[v] = false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<ElementId>> sublattice_embeddings(const FiniteLattice& l, const FiniteLattice& p,
                                                          std::size_t limit) {
  std::vector<std::vector<ElementId>> out;
  if (p.size() > l.size() || limit == 0) return out;
  std::vector<ElementId> f(p.size(), 0);
  std::vector<bool> used(l.size(), false);
  embed_rec(l, p, f, 0, used, [&](const std::vector<ElementId>& g) {
    out.push_back(g);
    return out.size() < limit;
  });
  return out;
}

std::optional<std::vector<ElementId>> has_sublattice_copy(const FiniteLattice& l, const FiniteLattice& p) {
  auto found = sublattice_embeddings(l, p, 1);
  if (found.empty()) return std::nullopt;
  return found.front();
}

namespace {

struct Signature {
  std::size_t height, depth, below, above, lower, upper;
  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const FiniteLattice& l) {
  std::vector<Signature> sig(l.size());
  std::vector<std::size_t> depth(l.size(), 0);
  // longest chain upward, processed against descending height
  std::vector<ElementId> by_height(l.size());
  std::iota(by_height.begin(), by_height.end(), ElementId(0));
  std::sort(by_height.begin(), by_height.end(),
            [&](ElementId a, ElementId b) { return l.height(a) > l.height(b); });
  for (ElementId x : by_height)
    for (ElementId y : l.upper_covers(x)) depth[x] = std::max(depth[x], depth[y] + 1);
  for (ElementId x = 0; x < l.size(); ++x) {
    std::size_t below = 0, above = 0;
    for (ElementId y = 0; y < l.size(); ++y) {
      below += l.leq(y, x);
      above += l.leq(x, y);
    }
    sig[x] = {l.height(x), depth[x], below, above, l.lower_covers(x).size(), l.upper_covers(x).size()};
  }
  return sig;
}

bool iso_rec(const FiniteLattice& a, const FiniteLattice& b, const std::vector<Signature>& sa,
             const std::vector<Signature>& sb, std::vector<ElementId>& f, std::vector<bool>& used,
             std::size_t k) {
  if (k == a.size()) return true;
  for (ElementId v = 0; v < b.size(); ++v) {
    if (used[v] || sa[k] != sb[v]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j)
      ok = (a.leq(ElementId(j), ElementId(k)) == b.leq(f[j], v)) &&
           (a.leq(ElementId(k), ElementId(j)) == b.leq(v, f[j]));
    if (!ok) continue;
    f[k] = v;
    used[v] = true;
    if (iso_rec(a, b, sa, sb, f, used, k + 1)) return true;
    used[v] = false;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size()) return false;
  auto sa = signatures(a), sb = signatures(b);
  auto ca = sa, cb = sb;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) return false;
  std::vector<ElementId> f(a.size(), 0);
  std::vector<bool> used(b.size(), false);
  return iso_rec(a, b, sa, sb, f, used, 0);
}

}  // namespace latforge
