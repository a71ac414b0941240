#include <doctest.h>

#include "latforge/catalog.hpp"
#include "latforge/io.hpp"

using namespace latforge;

TEST_CASE("lattice JSON round trips through covers") {
  for (const FiniteLattice& l : {make_n5(), make_m33(), make_boolean(3), make_d4hat()}) {
    auto parsed = from_json(to_json(l));
    REQUIRE(std::holds_alternative<FiniteLattice>(parsed));
    const FiniteLattice& back = std::get<FiniteLattice>(parsed);
    REQUIRE(back.size() == l.size());
    for (ElementId x = 0; x < l.size(); ++x) {
      CHECK(back.name(x) == l.name(x));
      for (ElementId y = 0; y < l.size(); ++y) {
        CHECK(back.leq(x, y) == l.leq(x, y));
        CHECK(back.meet(x, y) == l.meet(x, y));
      }
    }
  }
}

TEST_CASE("partial lattice JSON carries its constraints") {
  PartialLattice p4 = diamond(4);
  auto parsed = from_json(to_json(p4));
  REQUIRE(std::holds_alternative<PartialLattice>(parsed));
  const PartialLattice& back = std::get<PartialLattice>(parsed);
  CHECK(back.size() == p4.size());
  CHECK(back.joins().size() == p4.joins().size());
  CHECK(back.meets().size() == p4.meets().size());
  CHECK(validate_partial(back).ok);
  CHECK(whitman_partial(back).ok == whitman_partial(p4).ok);
  for (ElementId x = 0; x < p4.size(); ++x)
    for (ElementId y = 0; y < p4.size(); ++y) CHECK(back.leq(x, y) == p4.leq(x, y));
}

TEST_CASE("malformed JSON is reported as a parse error") {
  CHECK_THROWS_AS(from_json("not json"), ParseError);
  CHECK_THROWS_AS(from_json("{\"covers\": []}"), ParseError);
  // structurally valid JSON with cyclic covers surfaces the construction error
  CHECK_THROWS_AS(from_json("{\"n\": 2, \"covers\": [[0,1],[1,0]]}"), CyclicCoversError);
}

TEST_CASE("DOT export lists one edge per cover") {
  FiniteLattice n5 = make_n5();
  std::string dot = to_dot(n5);
  std::size_t arrows = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 1)) ++arrows;
  CHECK(arrows == n5.cover_pairs().size());
  CHECK(arrows == 5);
  CHECK(dot.find("p3") != std::string::npos);
}
