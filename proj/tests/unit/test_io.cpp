#include <doctest.h>

#include "azposet/error.hpp"
#include "azposet/families.hpp"
#include "azposet/io.hpp"
#include "azposet/rational.hpp"

using namespace azposet;

TEST_CASE("poset json round trip") {
  const RankedPoset P = gen_subspace_lattice(2, 2);
  const RankedPoset Q = poset_from_json(poset_to_json(P));
  CHECK(Q.size() == P.size());
  CHECK(Q.whitney_numbers() == P.whitney_numbers());
  CHECK(Q.covers().size() == P.covers().size());
  for (ElementId a = 0; a < P.size(); ++a) CHECK(Q.label(a) == P.label(a));
}

TEST_CASE("malformed poset json is rejected") {
  CHECK_THROWS_AS(poset_from_json(nlohmann::json::parse(R"({"elements": 3})")), Error);
}

TEST_CASE("dot output names every cover") {
  const std::string dot = poset_to_dot(gen_boolean(2));
  CHECK(dot.find("digraph") == 0);
  std::size_t arrows = 0;
  for (std::size_t i = dot.find("->"); i != std::string::npos; i = dot.find("->", i + 1)) ++arrows;
  CHECK(arrows == 4);
}

TEST_CASE("family json round trip") {
  const Family F{4, 1, 2};
  CHECK(family_from_json(family_to_json(F)) == F);
}

TEST_CASE("rational text form") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(1)) == "1/1");
  CHECK(parse_rational("5/4") == make_rational(5, 4));
  CHECK(parse_rational("3") == make_rational(3));
}
