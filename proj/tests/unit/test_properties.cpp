#include <doctest.h>

#include "azposet/error.hpp"
#include "azposet/families.hpp"
#include "azposet/properties.hpp"

using namespace azposet;

namespace {

RankedPoset non_normal() {
  return build_poset("nn", {{0, 0, "u"}, {1, 0, "v"}, {2, 1, "x"}, {3, 1, "y"}, {4, 1, "z"}},
                     {{0, 2}, {0, 3}, {0, 4}, {1, 2}});
}

}  // namespace

TEST_CASE("boolean lattice degree profile") {
  const auto r = check_regular(gen_boolean(3));
  REQUIRE(r.holds);
  CHECK(r.profile->lower == std::vector<std::uint64_t>{0, 1, 2, 3});
  CHECK(r.profile->upper == std::vector<std::uint64_t>{3, 2, 1, 0});
  CHECK(check_level_size_identity(gen_boolean(3), *r.profile));
}

TEST_CASE("irregular rank is located") {
  const auto r = check_regular(gen_fig1a());
  REQUIRE_FALSE(r.holds);
  CHECK(r.violation->rank == 2);
  CHECK(r.violation->lower);
}

TEST_CASE("normality in both modes") {
  for (auto mode : {NormalityMode::Enumerate, NormalityMode::Flow}) {
    CHECK(check_normal(gen_boolean(4), mode).holds);
    CHECK(check_normal(gen_fig1a(), mode).holds);
    const auto r = check_normal(non_normal(), mode);
    CHECK_FALSE(r.holds);
    CHECK(r.witness_level == 1);
    CHECK_FALSE(r.witness.empty());
  }
}

TEST_CASE("strict normality") {
  const auto fast = check_strictly_normal(gen_boolean(4));
  CHECK(fast.holds);
  CHECK(fast.path == StrictNormalityPath::RegularAndLevelConnected);
  const auto slow = check_strictly_normal(gen_fig1a());
  CHECK_FALSE(slow.holds);
  CHECK(slow.path == StrictNormalityPath::Enumeration);
  CHECK_FALSE(check_strictly_normal(gen_divisor_lattice(12)).holds);
  CHECK(check_strictly_normal(gen_chain_product({3, 3})).holds);
}

TEST_CASE("level connectivity") {
  CHECK(check_level_connected(gen_subspace_lattice(3, 2)).holds);
  const auto r = check_level_connected(gen_fig1b());
  CHECK_FALSE(r.holds);
  CHECK(r.first_disconnected == 1);
}

TEST_CASE("strong regularity of the boolean lattice") {
  const auto r = check_strongly_regular(gen_boolean(3));
  REQUIRE(r.holds);
  CHECK((*r.table)(1, 0, 3) == 3);
  CHECK((*r.table)(2, 1, 3) == 2);
  CHECK((*r.table)(3, 2, 1) == 0);
  CHECK_THROWS_AS(check_strongly_regular(gen_star_power(2, 2)), Error);
}

TEST_CASE("chain covering") {
  const RankedPoset L = gen_subspace_lattice(3, 2);
  const auto cov = build_chain_covering(L);
  const auto v = verify_chain_covering(L, cov);
  CHECK(v.holds);
  CHECK(v.total_mass == 1);
  try {
    build_chain_covering(non_normal());
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormal);
  }
}

TEST_CASE("certificates carry property and verdict") {
  const auto j = certificate(gen_fig1a(), check_regular(gen_fig1a()));
  CHECK(j["property"] == "regular");
  CHECK(j["holds"] == false);
  CHECK(j["witness"].size() == 2);
}
