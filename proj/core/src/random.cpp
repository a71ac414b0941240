#include "latforge/random.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "latforge/catalog.hpp"

namespace latforge {

namespace {

const std::vector<FiniteLattice>& host_pool() {
  static const std::vector<FiniteLattice> pool = [] {
    std::vector<FiniteLattice> p;
    p.push_back(make_boolean(3));
    p.push_back(make_boolean(4));
    p.push_back(make_m(3));
    p.push_back(make_m(4));
    p.push_back(make_n5());
    p.push_back(make_d4());
    p.push_back(make_m33());
    p.push_back(make_chain(6));
    p.push_back(product(make_m(3), make_chain(3)));
    p.push_back(product(make_n5(), make_chain(2)));
    p.push_back(product(make_boolean(2), make_chain(3)));
    p.push_back(product(make_d4(), make_chain(2)));
    return p;
  }();
  return pool;
}

}  // namespace

FiniteLattice random_lattice(std::mt19937_64& rng, std::size_t max_n) {
  if (max_n < 1) throw BadParamError("BadParam: max_n must be positive");
  for (int attempt = 0; attempt < 64; ++attempt) {
    const FiniteLattice& host = host_pool()[rng() % host_pool().size()];
    std::size_t seeds = 2 + rng() % 4;
    std::vector<ElementId> seed;
    for (std::size_t i = 0; i < seeds; ++i) seed.push_back(ElementId(rng() % host.size()));
    try {
      std::vector<ElementId> closed = sublattice_closure(host, seed, max_n);
      return sublattice(host, closed);
    } catch (const CapExceededError&) {
      continue;
    }
  }
  return make_chain(std::min<std::size_t>(max_n, 2));
}

Quotient principal_congruence_quotient(const FiniteLattice& l, ElementId a, ElementId b) {
  const std::size_t n = l.size();
  std::vector<ElementId> parent(n);
  std::iota(parent.begin(), parent.end(), ElementId(0));
  std::function<ElementId(ElementId)> find = [&](ElementId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<ElementId, ElementId>> queue;
  auto unite = [&](ElementId x, ElementId y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent[y] = x;
    queue.emplace_back(x, y);
  };
  unite(a, b);
  // saturate: congruences are compatible with both operations
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [x, y] = queue[head];
    for (ElementId z = 0; z < n; ++z) {
      unite(l.meet(x, z), l.meet(y, z));
      unite(l.join(x, z), l.join(y, z));
    }
  }

  std::vector<ElementId> rep(n);
  std::vector<ElementId> classes;
  for (ElementId x = 0; x < n; ++x) rep[x] = find(x);
  for (ElementId x = 0; x < n; ++x)
    if (rep[x] == x) classes.push_back(x);
  std::vector<ElementId> index_of(n, 0);
  for (std::size_t i = 0; i < classes.size(); ++i) index_of[classes[i]] = ElementId(i);

  Quotient q;
  q.map.resize(n);
  for (ElementId x = 0; x < n; ++x) q.map[x] = index_of[rep[x]];
  q.lattice = FiniteLattice::from_order(classes.size(), [&](ElementId i, ElementId j) {
    // [x] <= [y] iff x ^ y is congruent to x
    return rep[l.meet(classes[i], classes[j])] == classes[i];
  });
  return q;
}

Quotient random_quotient(std::mt19937_64& rng, const FiniteLattice& l) {
  Quotient best = principal_congruence_quotient(l, ElementId(rng() % l.size()), ElementId(rng() % l.size()));
  auto proper = [&](const Quotient& q) { return 1 < q.lattice.size() && q.lattice.size() < l.size(); };
  for (int attempt = 0; attempt < 8 && !proper(best); ++attempt) {
    ElementId a = ElementId(rng() % l.size());
    ElementId b = ElementId(rng() % l.size());
    Quotient q = principal_congruence_quotient(l, a, b);
    if (proper(q) || q.lattice.size() > best.lattice.size()) best = std::move(q);
    if (proper(best)) break;
  }
  return best;
}

}  // namespace latforge
