#include <doctest.h>

#include "azposet/error.hpp"
#include "azposet/families.hpp"
#include "azposet/sperner.hpp"

using namespace azposet;

TEST_CASE("antichains and k-Sperner families") {
  const RankedPoset B = gen_boolean(3);
  CHECK(is_antichain(B, level_family(B, 1)));
  CHECK_FALSE(is_antichain(B, Family{1, 3}));
  const auto r = is_k_sperner(B, Family{0, 1, 3}, 2);
  CHECK_FALSE(r.holds);
  CHECK(r.chain.size() == 3);
  CHECK(is_k_sperner(B, Family{0, 1, 3}, 3).holds);
  CHECK_THROWS_AS(is_k_sperner(B, Family{0}, 0), Error);
}

TEST_CASE("height classes partition a family into antichains") {
  const RankedPoset B = gen_boolean(3);
  const Family F{0, 1, 2, 3, 7};
  CHECK(longest_chain_length(B, F) == 4);
  const auto d = dual_dilworth_decompose(B, F);
  CHECK(d.parts.size() == 4);
  for (const auto& part : d.parts) CHECK(is_antichain(B, part));
}

TEST_CASE("lym sum of a full level is one") {
  const RankedPoset B = gen_boolean(4);
  CHECK(lym_sum(B, level_family(B, 2)) == 1);
}

TEST_CASE("maximum antichain matches the chain cover") {
  const auto r = max_antichain(gen_boolean(4));
  CHECK(r.antichain.size() == 6);
  CHECK(r.chain_cover.size() == 6);
  CHECK(max_antichain(gen_fig1a()).antichain.size() == 2);
}

TEST_CASE("strict Sperner property") {
  const auto r = check_strict_k_sperner(gen_boolean(3), 2);
  CHECK(r.holds);
  CHECK(r.maximum_size == 6);
  CHECK(r.maxima == 1);
  const auto a = check_strict_k_sperner(gen_fig1a(), 1);
  CHECK_FALSE(a.holds);
  REQUIRE(a.witness.has_value());
  CHECK_FALSE(is_homogeneous(gen_fig1a(), *a.witness));
}

TEST_CASE("oracle mode agrees with exhaustive search") {
  for (const char* spec : {"boolean:4", "subspace:3,2", "chains:3,3", "star:2,2"}) {
    CAPTURE(spec);
    const RankedPoset P = generate(spec);
    const auto ex = check_strict_k_sperner(P, 1, StrictSpernerMode::Exhaustive);
    const auto orc = check_strict_k_sperner(P, 1, StrictSpernerMode::Oracle);
    CHECK(ex.holds == orc.holds);
    CHECK(ex.maximum_size == orc.maximum_size);
  }
}

TEST_CASE("all maximum families of B_2") {
  const auto fams = maximum_k_sperner_families(gen_boolean(2), 1);
  REQUIRE(fams.size() == 1);
  CHECK(fams.front() == Family{1, 2});
}

TEST_CASE("strict LYM verdicts") {
  const RankedPoset B = gen_boolean(3);
  CHECK(check_strict_lym(B, level_family(B, 1), 1).verdict == LymVerdict::Homogeneous);
  CHECK(check_strict_lym(B, Family{1, 6}, 1).verdict == LymVerdict::InequalityStrict);
  CHECK_THROWS_AS(check_strict_lym(B, Family{1, 3}, 1), Error);
}
