#include <doctest.h>

#include <random>

#include "latforge/catalog.hpp"
#include "latforge/io.hpp"
#include "latforge/linear.hpp"

using namespace latforge;

namespace {

Subspace random_subspace(std::mt19937_64& rng, int q, int n) {
  std::vector<std::vector<int>> rows(rng() % std::size_t(n + 1), std::vector<int>(std::size_t(n), 0));
  for (auto& row : rows)
    for (auto& v : row) v = int(rng() % std::uint64_t(q));
  return Subspace(q, n, rows);
}

}  // namespace

TEST_CASE("sum and intersection identities") {
  Subspace zero(2, 4);
  Subspace full = Subspace::full(2, 4);
  Subspace x(2, 4, {{1, 0, 1, 0}, {0, 1, 1, 0}});
  CHECK(sum(x, zero) == x);
  CHECK(intersect(x, full) == x);
  CHECK(leq(zero, x));
  CHECK(leq(x, full));

  Subspace e1(2, 2, {{1, 0}});
  Subspace e2(2, 2, {{0, 1}});
  CHECK(sum(e1, e2) == Subspace::full(2, 2));
  CHECK(intersect(e1, e2) == Subspace(2, 2));

  CHECK_THROWS_AS(sum(e1, x), DimensionMismatchError);
  CHECK_THROWS_AS(sum(e1, Subspace(3, 2)), FieldMismatchError);
  CHECK_THROWS_AS(Subspace(4, 2), BadParamError);  // not prime
}

TEST_CASE("modular dimension law on random pairs") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    int q = (i % 2) ? 2 : 3;
    int n = 2 + int(rng() % 4);
    Subspace x = random_subspace(rng, q, n);
    Subspace y = random_subspace(rng, q, n);
    CHECK(sum(x, y).dim() + intersect(x, y).dim() == x.dim() + y.dim());
  }
}

TEST_CASE("canonical form is presentation independent") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    int q = (i % 2) ? 2 : 5;
    int n = 3 + int(rng() % 3);
    Subspace x = random_subspace(rng, q, n);
    if (x.dim() == 0) continue;
    // re-present by random invertible row mixing
    std::vector<std::vector<int>> mixed;
    for (const auto& row : x.rows()) mixed.push_back(std::vector<int>(row.begin(), row.end()));
    for (int step = 0; step < 12; ++step) {
      std::size_t a = rng() % mixed.size(), b = rng() % mixed.size();
      int scale = 1 + int(rng() % std::uint64_t(q - 1));
      if (a == b) {
        for (auto& v : mixed[a]) v = v * scale % q;
      } else {
        for (std::size_t j = 0; j < mixed[a].size(); ++j) mixed[a][j] = (mixed[a][j] + scale * mixed[b][j]) % q;
      }
    }
    CHECK(Subspace(q, n, mixed) == x);
  }
}

TEST_CASE("subspace counts match the Gaussian binomial sums") {
  CHECK(subspace_count(2, 3) == 16);
  CHECK(subspace_count(3, 2) == 6);
  CHECK(subspace_count(2, 4) == 67);
  CHECK(full_subspace_lattice(2, 3).elements.size() == 16);
  CHECK(full_subspace_lattice(3, 2).elements.size() == 6);
  CHECK(full_subspace_lattice(2, 4).elements.size() == 67);
  CHECK_THROWS_AS(full_subspace_lattice(2, 10, 1000), CapExceededError);
}

TEST_CASE("the projective line over GF(2) is the diamond") {
  SubspaceLattice sl = full_subspace_lattice(2, 2);
  CHECK(sl.elements.size() == 5);
  CHECK(is_isomorphic(sl.lattice, make_m(3)));
}

TEST_CASE("full subspace lattices are modular and relatively complemented") {
  for (auto [q, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 4}}) {
    SubspaceLattice sl = full_subspace_lattice(q, n);
    CHECK(is_modular(sl.lattice).ok);
    CHECK(is_relatively_complemented(sl.lattice).ok);
    // meet and join really are intersection and sum
    for (ElementId i = 0; i < sl.lattice.size(); ++i)
      for (ElementId j = 0; j < sl.lattice.size(); ++j) {
        CHECK(sl.elements[sl.lattice.meet(i, j)] == intersect(sl.elements[i], sl.elements[j]));
        CHECK(sl.elements[sl.lattice.join(i, j)] == sum(sl.elements[i], sl.elements[j]));
      }
  }
}

TEST_CASE("relative complements by basis extension") {
  Subspace a(2, 3, {{1, 0, 0}});
  Subspace x(2, 3, {{1, 0, 0}, {0, 1, 0}});
  Subspace b = Subspace::full(2, 3);
  Subspace y = relative_complement_linear(x, a, b);
  CHECK(intersect(x, y) == a);
  CHECK(sum(x, y) == b);

  CHECK(relative_complement_linear(x, x, b) == b);
  CHECK_THROWS_AS(relative_complement_linear(a, x, b), BadIntervalError);

  std::mt19937_64 rng(29);
  int done = 0;
  while (done < 500) {
    int q = (done % 2) ? 2 : 3;
    int n = 2 + int(rng() % 4);
    Subspace mid = random_subspace(rng, q, n);
    Subspace low = intersect(mid, random_subspace(rng, q, n));
    Subspace high = sum(mid, random_subspace(rng, q, n));
    Subspace compl_space = relative_complement_linear(mid, low, high);
    CHECK(intersect(mid, compl_space) == low);
    CHECK(sum(mid, compl_space) == high);
    ++done;
  }
}

TEST_CASE("interleaved subspace families") {
  for (auto [bigN, q] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {5, 3}}) {
    CdFamily fam(bigN, q);
    for (int n = 0; n <= bigN - 2; ++n) {
      CHECK(intersect(fam.c(n), fam.d(n)) == fam.expected_cd_intersection(n));
      CHECK(sum(fam.a(n), fam.b(n)).dim() == 2 * (n + 1));
    }
    // the next family member in its eliminated form: the plain basis vectors
    // up to n, then a shifted copy of the original generating pattern
    for (int n = 0; n + 1 <= bigN - 2; ++n) {
      std::vector<std::vector<int>> gens;
      for (int k = 0; k <= n; ++k) {
        std::vector<int> va(std::size_t(2 * bigN), 0), vb(std::size_t(2 * bigN), 0);
        va[std::size_t(k)] = 1;
        vb[std::size_t(bigN + k)] = 1;
        gens.push_back(va);
        gens.push_back(vb);
      }
      for (int k = n + 1; k < bigN; ++k) {
        std::vector<int> v(std::size_t(2 * bigN), 0);
        v[std::size_t(k)] = 1;
        v[std::size_t(bigN + k)] = 1;
        if (k > n + 1) v[std::size_t(k - 1)] += 1;
        gens.push_back(v);
      }
      CHECK(fam.c(n + 1) == Subspace(q, 2 * bigN, gens));
    }
    for (int n = 0; n <= bigN - 3; ++n) {
      Subspace cd = intersect(fam.c(n), fam.d(n));
      Subspace ab = sum(fam.a(n), fam.b(n));
      CHECK(leq(cd, ab));
      CHECK(leq(ab, intersect(fam.c(n + 1), fam.d(n + 1))));
    }
    CHECK_THROWS_AS(fam.a(bigN - 1), IndexOutOfTruncationError);
    CHECK_THROWS_AS(fam.c(-1), IndexOutOfTruncationError);
  }
}

TEST_CASE("subspace JSON round trip") {
  Subspace x(3, 4, {{1, 2, 0, 1}, {0, 0, 1, 2}});
  Subspace back = subspace_from_json(to_json(x));
  CHECK(back == x);
}
