#include <doctest.h>

#include "azposet/error.hpp"
#include "azposet/families.hpp"
#include "azposet/poset.hpp"

using namespace azposet;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("build_poset derives levels and covers") {
  const RankedPoset P = build_poset("v", {{0, 0, "a"}, {1, 1, "b"}, {2, 1, "c"}}, {{0, 1}, {0, 2}});
  CHECK(P.size() == 3);
  CHECK(P.whitney_numbers() == std::vector<std::uint64_t>{1, 2});
  CHECK(P.lower_degree(1) == 1);
  CHECK(P.upper_degree(0) == 2);
  CHECK(P.leq(0, 2));
  CHECK_FALSE(P.comparable(1, 2));
  CHECK(P.find_label("c") == ElementId{2});
  CHECK(P.is_u_poset() == false);
}

TEST_CASE("build_poset rejects covers that skip a rank") {
  CHECK(code_of([] { build_poset("bad", {{0, 0, ""}, {1, 1, ""}, {2, 2, ""}}, {{0, 1}, {1, 2}, {0, 2}}); }) == ErrorCode::CoverRankError);
}

TEST_CASE("whole and level families") {
  const RankedPoset B = gen_boolean(3);
  CHECK(whole(B).size() == 8);
  CHECK(level_family(B, 2).size() == 3);
  CHECK(is_homogeneous(B, level_family(B, 1)));
  CHECK_FALSE(is_homogeneous(B, Family{1, 3}));
}

TEST_CASE("shadows and shades") {
  const RankedPoset B = gen_boolean(3);
  CHECK(gamma_down(B, 3).size() == 2);
  CHECK(gamma_up(B, 1).size() == 2);
  CHECK(gamma_up_set_to_level(B, Family{1}, 2).size() == 2);
  CHECK(gamma_down_set_to_level(B, Family{3, 5}, 1).size() == 3);
  CHECK(gamma_up_set_to_level(B, Family{1}, 7).empty());
  CHECK(gamma_down_set_to_level(B, Family{1}, -1).empty());
}

TEST_CASE("upsets and downsets") {
  const RankedPoset B = gen_boolean(3);
  CHECK(upset(B, Family{1}).size() == 4);
  CHECK(downset(B, Family{3}).size() == 4);
  const auto mask = upset_mask(B, Family{3});
  CHECK(mask[7] == 1);
  CHECK(mask[5] == 0);
}

TEST_CASE("maximal chain counts") {
  CHECK(count_maximal_chains(gen_boolean(4)).total == 24);
  CHECK(count_maximal_chains(gen_subspace_lattice(3, 2)).total == 21);
  CHECK(count_maximal_chains(gen_fig1a()).total == 3);
}

TEST_CASE("adjoin_bounds adds a bottom and a top") {
  const RankedPoset S = gen_star_power(2, 3);
  CHECK_FALSE(S.is_u_poset());
  const RankedPoset T = adjoin_bounds(S);
  CHECK(T.is_u_poset());
  CHECK(T.size() == S.size() + 2);
  CHECK(T.num_levels() == S.num_levels() + 2);
}

TEST_CASE("requirement helpers raise typed errors") {
  const RankedPoset S = gen_star_power(2, 2);
  CHECK(code_of([&] { S.require_u_poset("op"); }) == ErrorCode::NotUPoset);
  CHECK(code_of([&] { S.require_member(1000); }) == ErrorCode::InvalidInput);
}
