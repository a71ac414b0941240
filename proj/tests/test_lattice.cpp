#include <doctest.h>

#include <random>
#include <set>

#include "latforge/catalog.hpp"
#include "latforge/random.hpp"

using namespace latforge;

namespace {

// Exhaustive algebra-law check, independent of the table construction.
void check_lattice_axioms(const FiniteLattice& l) {
  for (ElementId x = 0; x < l.size(); ++x)
    for (ElementId y = 0; y < l.size(); ++y) {
      CHECK(l.meet(x, y) == l.meet(y, x));
      CHECK(l.join(x, y) == l.join(y, x));
      CHECK(l.meet(x, l.join(x, y)) == x);
      CHECK(l.join(x, l.meet(x, y)) == x);
      CHECK((l.leq(x, y) == (l.meet(x, y) == x)));
      CHECK((l.leq(x, y) == (l.join(x, y) == y)));
      for (ElementId z = 0; z < l.size(); ++z) {
        CHECK(l.meet(l.meet(x, y), z) == l.meet(x, l.meet(y, z)));
        CHECK(l.join(l.join(x, y), z) == l.join(x, l.join(y, z)));
      }
    }
  CHECK(l.leq(l.bottom(), l.top()));
}

}  // namespace

TEST_CASE("from_covers builds the trivial lattice") {
  FiniteLattice l = FiniteLattice::from_covers(CoverSpec(1, {}));
  CHECK(l.size() == 1);
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 0);
}

TEST_CASE("pentagon facts follow from its cover presentation") {
  FiniteLattice n5 = make_n5();
  ElementId p1 = n5.by_name("p1"), p3 = n5.by_name("p3");
  CHECK(n5.join(p1, p3) == n5.by_name("1"));
  CHECK(n5.meet(p1, p3) == n5.by_name("0"));
  CHECK(n5.leq(p1, n5.by_name("p2")));
  CHECK(!n5.leq(p1, p3));
}

TEST_CASE("posets without unique bounds are rejected") {
  // two minimal upper bounds for {1, 2}
  CoverSpec bad(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}});
  CHECK_THROWS_AS(FiniteLattice::from_covers(bad), NotALatticeError);
  try {
    FiniteLattice::from_covers(bad);
  } catch (const NotALatticeError& e) {
    CHECK(e.x == 1);
    CHECK(e.y == 2);
  }
}

TEST_CASE("cyclic covers are rejected") {
  CHECK_THROWS_AS(FiniteLattice::from_covers(CoverSpec(3, {{0, 1}, {1, 2}, {2, 0}})), CyclicCoversError);
  CHECK_THROWS_AS(FiniteLattice::from_covers(CoverSpec(2, {{0, 0}})), CyclicCoversError);
}

TEST_CASE("constructed lattices satisfy the lattice axioms") {
  check_lattice_axioms(make_n5());
  check_lattice_axioms(make_d4());
  check_lattice_axioms(make_d4hat());
  check_lattice_axioms(make_m33());
  check_lattice_axioms(make_m(5));
  check_lattice_axioms(make_boolean(4));
  check_lattice_axioms(make_chain(4));
  check_lattice_axioms(product(make_m(3), make_chain(3)));
  check_lattice_axioms(dual(make_d4hat()));
  check_lattice_axioms(bounds_extension(make_n5()));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) check_lattice_axioms(random_lattice(rng, 8));
}

TEST_CASE("catalog labelings") {
  FiniteLattice m33 = make_m33();
  CHECK(m33.size() == 8);
  CHECK(m33.meet(m33.by_name("u0"), m33.by_name("u1")) == m33.by_name("u"));
  CHECK(m33.join(m33.by_name("v0"), m33.by_name("v1")) == m33.by_name("v"));
  CHECK(m33.join(m33.by_name("u0"), m33.by_name("u1")) == m33.by_name("1"));

  FiniteLattice d4 = make_d4();
  CHECK(d4.join(d4.by_name("a0"), d4.by_name("a1")) == d4.by_name("c"));
  CHECK(d4.meet(d4.by_name("b0"), d4.by_name("b1")) == d4.by_name("c"));

  FiniteLattice d4h = make_d4hat();
  CHECK(d4h.join(d4h.by_name("a0"), d4h.by_name("a1")) == d4h.by_name("c0"));
  CHECK(d4h.meet(d4h.by_name("b0"), d4h.by_name("b1")) == d4h.by_name("c1"));
  CHECK(is_distributive(d4h).ok);

  CHECK(make_boolean(3).size() == 8);
  CHECK(is_distributive(make_boolean(3)).ok);
  CHECK_THROWS_AS(make_m(2), BadParamError);
  CHECK_THROWS_AS(catalog("nonsense"), UnknownNameError);
  CHECK(std::holds_alternative<PartialLattice>(catalog_by_name("P_3")));
  CHECK(std::get<FiniteLattice>(catalog_by_name("M_33")).size() == 35);  // 33 atoms
  CHECK(std::get<FiniteLattice>(catalog_by_name("M33")).size() == 8);
}

TEST_CASE("property checkers on the catalog") {
  CHECK(!is_modular(make_n5()).ok);
  CHECK(is_modular(make_m33()).ok);
  CHECK(is_distributive(make_boolean(3)).ok);
  CHECK(!is_distributive(make_m(3)).ok);
  CHECK(is_modular(make_m(3)).ok);
  CHECK(satisfies_whitman(make_m(3)).ok);
  CHECK(!is_semidistributive(make_m(3)).ok);
  CHECK(!satisfies_whitman(make_d4()).ok);
  CHECK(is_semidistributive(make_n5()).ok);
}

TEST_CASE("relative complements") {
  FiniteLattice b3 = make_boolean(3);
  // {1} inside [{}, {1,2}]
  auto compls = relative_complements(b3, 1, 0, 3);
  CHECK(compls == std::vector<ElementId>{2});
  // endpoint case: a ^ y = a forces y >= a, so y = a v y = b uniquely
  FiniteLattice m4 = make_m(4);
  auto end = relative_complements(m4, m4.by_name("q1"), m4.by_name("q1"), m4.top());
  CHECK(end == std::vector<ElementId>{m4.top()});
  CHECK_THROWS_AS(relative_complements(b3, 1, 2, 3), BadIntervalError);

  CHECK(is_relatively_complemented(make_boolean(4)).ok);
  CHECK(is_relatively_complemented(make_m(3)).ok);
  CHECK(!is_relatively_complemented(make_n5()).ok);
  CHECK(!is_relatively_complemented(make_d4()).ok);

  // the pentagon's failure: p1 has no complement inside [0, p2]
  FiniteLattice n5 = make_n5();
  CHECK(relative_complements(n5, n5.by_name("p1"), n5.by_name("0"), n5.by_name("p2")).empty());
}

TEST_CASE("dual, product, interval, bounds extension") {
  CHECK(is_isomorphic(dual(make_n5()), make_n5()));
  CHECK(is_isomorphic(product(make_chain(2), make_chain(2)), make_boolean(2)));
  CHECK(bounds_extension(make_m33()).size() == 10);

  FiniteLattice d4 = make_d4();
  FiniteLattice upper = interval(d4, d4.by_name("c"), d4.by_name("1"));
  CHECK(is_isomorphic(upper, make_boolean(2)));
  CHECK_THROWS_AS(interval(d4, d4.by_name("b0"), d4.by_name("a0")), BadIntervalError);

  FiniteLattice dd = dual(dual(make_m33()));
  for (ElementId x = 0; x < dd.size(); ++x)
    for (ElementId y = 0; y < dd.size(); ++y) CHECK(dd.leq(x, y) == make_m33().leq(x, y));

  // associativity up to isomorphism
  FiniteLattice a = make_chain(2), b = make_m(3), c = make_chain(3);
  CHECK(is_isomorphic(product(product(a, b), c), product(a, product(b, c))));
}

TEST_CASE("round trip through covers") {
  for (const FiniteLattice& l :
       {make_n5(), make_d4(), make_m33(), make_boolean(3), make_m(4), make_chain(5)}) {
    FiniteLattice back = FiniteLattice::from_covers(l.to_cover_spec());
    CHECK(is_isomorphic(l, back));
  }
}

TEST_CASE("sublattice closure") {
  FiniteLattice n5 = make_n5();
  auto cl = sublattice_closure(n5, {n5.by_name("p1"), n5.by_name("p3")});
  CHECK(cl == std::vector<ElementId>{n5.by_name("0"), n5.by_name("p1"), n5.by_name("p3"), n5.by_name("1")});

  FiniteLattice m33 = make_m33();
  auto cl2 = sublattice_closure(m33, {m33.by_name("u0"), m33.by_name("u1")});
  CHECK(cl2 == std::vector<ElementId>{m33.by_name("u"), m33.by_name("u0"), m33.by_name("u1"),
                                      m33.by_name("1")});

  auto cl3 = sublattice_closure(n5, {n5.by_name("0"), n5.by_name("1")});
  CHECK(cl3.size() == 2);

  CHECK_THROWS_AS(sublattice_closure(m33, {0, 5, 6}, 2), CapExceededError);
  CHECK_THROWS_AS(sublattice_closure(m33, {}), BadParamError);
}

TEST_CASE("closure results are closed and minimal") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    FiniteLattice l = random_lattice(rng, 8);
    std::vector<ElementId> seed;
    for (std::size_t s = 0; s < 1 + rng() % 3; ++s) seed.push_back(ElementId(rng() % l.size()));
    auto cl = sublattice_closure(l, seed);
    std::set<ElementId> inside(cl.begin(), cl.end());
    for (ElementId x : cl)
      for (ElementId y : cl) {
        CHECK(inside.count(l.meet(x, y)) == 1);
        CHECK(inside.count(l.join(x, y)) == 1);
      }
    // minimality: dropping a non-generator breaks closedness or containment
    for (ElementId drop : cl) {
      bool is_seed = false;
      for (ElementId s : seed) is_seed = is_seed || s == drop;
      if (is_seed) continue;
      std::set<ElementId> smaller = inside;
      smaller.erase(drop);
      bool still_closed = true;
      for (ElementId x : smaller)
        for (ElementId y : smaller)
          still_closed = still_closed && smaller.count(l.meet(x, y)) && smaller.count(l.join(x, y));
      CHECK(!still_closed);
    }
  }
}

TEST_CASE("join irreducibles and join primes") {
  FiniteLattice b3 = make_boolean(3);
  CHECK(join_irreducibles(b3) == std::vector<ElementId>{1, 2, 4});

  FiniteLattice d4 = make_d4();
  CHECK(join_irreducibles(d4) == std::vector<ElementId>{d4.by_name("a0"), d4.by_name("a1"),
                                                        d4.by_name("b0"), d4.by_name("b1")});

  FiniteLattice m3 = make_m(3);
  CHECK(!is_join_prime(m3, m3.by_name("q1")));
  CHECK(is_join_prime(b3, 1));
}

TEST_CASE("doubly reducible elements and two-square copies") {
  FiniteLattice d4 = make_d4();
  auto found = find_doubly_reducible(d4);
  REQUIRE(found.size() == 1);
  CHECK(found[0].c == d4.by_name("c"));
  CHECK(found[0].a0 == d4.by_name("a0"));
  CHECK(found[0].b0 == d4.by_name("b0"));

  CHECK(find_doubly_reducible(make_boolean(3)).empty());
  CHECK(has_sublattice_copy(make_boolean(3), d4) == std::nullopt);
  CHECK(has_sublattice_copy(d4, d4).has_value());

  // the embedding returned really is operation-preserving
  FiniteLattice host = product(make_m(3), make_boolean(2));
  auto emb = has_sublattice_copy(host, d4);
  REQUIRE(emb.has_value());
  for (ElementId x = 0; x < d4.size(); ++x)
    for (ElementId y = 0; y < d4.size(); ++y) {
      CHECK((*emb)[d4.meet(x, y)] == host.meet((*emb)[x], (*emb)[y]));
      CHECK((*emb)[d4.join(x, y)] == host.join((*emb)[x], (*emb)[y]));
    }
}

TEST_CASE("distributivity against forbidden sublattices") {
  std::mt19937_64 rng(11);
  std::vector<FiniteLattice> pool = {make_n5(),        make_d4(),      make_d4hat(), make_m33(),
                                     make_boolean(3),  make_m(3),      make_m(4),    make_chain(4),
                                     product(make_m(3), make_chain(2))};
  for (int i = 0; i < 40; ++i) pool.push_back(random_lattice(rng, 8));
  FiniteLattice m3 = make_m(3), n5 = make_n5();
  for (const FiniteLattice& l : pool) {
    bool dist = is_distributive(l).ok;
    bool mod = is_modular(l).ok;
    if (dist) CHECK(mod);
    if (mod) CHECK(!has_sublattice_copy(l, n5).has_value());
    bool no_m3 = !has_sublattice_copy(l, m3).has_value();
    bool no_n5 = !has_sublattice_copy(l, n5).has_value();
    CHECK(dist == (no_m3 && no_n5));
  }
}
