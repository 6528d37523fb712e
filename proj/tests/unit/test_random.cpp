#include <doctest.h>

#include <set>

#include "azposet/families.hpp"
#include "azposet/random.hpp"

using namespace azposet;

TEST_CASE("random families are reproducible") {
  const RankedPoset B = gen_boolean(5);
  CHECK(random_family(B, 7, 42) == random_family(B, 7, 42));
  CHECK(random_family(B, 7, 42).size() == 7);
}

TEST_CASE("sampling draws distinct pool members") {
  std::vector<ElementId> pool(20);
  for (ElementId i = 0; i < 20; ++i) pool[i] = i * 3;
  std::mt19937_64 rng(7);
  const auto picked = sample_distinct(pool, 20, rng);
  CHECK(std::set<ElementId>(picked.begin(), picked.end()).size() == 20);
}
