#include <doctest.h>

#include "azposet/az.hpp"
#include "azposet/error.hpp"
#include "azposet/families.hpp"
#include "azposet/properties.hpp"

using namespace azposet;

TEST_CASE("W counts lower covers outside the upset") {
  const RankedPoset B = gen_boolean(3);
  const Family A{1};
  CHECK(compute_W(B, A, 1) == 1);
  CHECK(compute_W(B, A, 3) == 1);
  CHECK(compute_W(B, A, 7) == 1);
  CHECK(compute_W(B, A, 2) == 0);
  CHECK(compute_W_all(B, A).size() == 8);
}

TEST_CASE("identity sum is one on regular U-posets") {
  const RankedPoset B = gen_boolean(3);
  CHECK(az_identity_sum(B, Family{1, 6}).equals_one());
  CHECK(az_identity_sum(B, Family{0}).equals_one());
  CHECK(az_identity_sum(B, Family{0}).terms[0].convention_bottom);
}

TEST_CASE("irregular figure gives five quarters") {
  const RankedPoset A = gen_fig1a();
  const auto b = az_identity_sum(A, Family{2, 3});
  CHECK(b.total == make_rational(5, 4));
  CHECK_FALSE(b.regular);
  CHECK(b.terms[4].term == make_rational(1, 4));
}

TEST_CASE("identity sum preconditions") {
  CHECK_THROWS_AS(az_identity_sum(gen_star_power(2, 2), Family{0}), Error);
  CHECK_THROWS_AS(az_identity_sum(gen_boolean(2), Family{}), Error);
}

TEST_CASE("key lemma sum on a regular poset") {
  const auto r = key_lemma_sum(gen_subspace_lattice(2, 2), Family{1});
  CHECK(r.total == 1);
  CHECK(r.bounded_total == 1);
  CHECK_THROWS_AS(key_lemma_sum(gen_fig1a(), Family{2}), Error);
}

TEST_CASE("antichain split into lym part and remainder") {
  const RankedPoset B = gen_boolean(3);
  const auto r = antichain_az(B, Family{1, 6});
  CHECK(r.lym_part == make_rational(2, 3));
  CHECK(r.total() == 1);
  CHECK_THROWS_AS(antichain_az(B, Family{1, 3}), Error);
}

TEST_CASE("k-Sperner identity sums to k") {
  const RankedPoset B = gen_boolean(3);
  const auto r = k_sperner_az(B, Family{1, 2, 3, 5}, 2);
  CHECK(r.parts.size() == 2);
  CHECK(r.total == 2);
}

TEST_CASE("beta on boolean lattices") {
  const RankedPoset B = gen_boolean(4);
  CHECK(beta(B, 0, 0) == 1);
  CHECK(beta(B, 1, 1) == make_rational(1, 4));
  CHECK(beta(B, 1, 2) == make_rational(1, 3));
  CHECK(beta(B, 2, 3) == make_rational(1, 3));
  CHECK_THROWS_AS(beta(B, 3, 1), Error);
  CHECK_THROWS_AS(beta(gen_fig1a(), 0, 1), Error);
}

TEST_CASE("second identity on a skew pair system") {
  const RankedPoset B = gen_boolean(3);
  const SkewPairSystem good{{{1, 3}, {4, 6}}};
  const auto r = second_az_identity(B, good);
  CHECK(r.total == 1);
  CHECK(r.betas.size() == 2);
  try {
    second_az_identity(B, SkewPairSystem{{{1, 3}, {2, 6}}});
    FAIL("expected SkewViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SkewViolation);
  }
}

TEST_CASE("breakdown json lists nonzero terms") {
  const auto j = to_json(gen_fig1a(), az_identity_sum(gen_fig1a(), Family{2, 3}));
  CHECK(j["total"] == "5/4");
  CHECK(j["terms"].size() == 3);
}
