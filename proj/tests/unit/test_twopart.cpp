#include <doctest.h>

#include "azposet/error.hpp"
#include "azposet/families.hpp"
#include "azposet/twopart.hpp"

using namespace azposet;

TEST_CASE("product families stay sorted and unique") {
  const ProductFamily F{{2, 1}, {0, 0}, {2, 1}};
  CHECK(F.size() == 2);
  CHECK(F.members().front() == ProductMember{0, 0});
  CHECK(F.slice_at_q(1) == Family{2});
  CHECK(F.swapped().contains({1, 2}));
}

TEST_CASE("two-part Sperner recognition") {
  const RankedPoset B = gen_boolean(2);
  const ProductFamily ok{{0, 3}, {1, 1}, {3, 0}};
  const ProductFamily bad{{0, 0}, {1, 0}};
  CHECK(is_two_part_sperner(B, B, ok).holds);
  CHECK(is_two_part_sperner_by_slices(B, B, ok));
  const auto r = is_two_part_sperner(B, B, bad);
  CHECK_FALSE(r.holds);
  CHECK(r.violation.has_value());
  CHECK_FALSE(is_two_part_sperner_by_slices(B, B, bad));
}

TEST_CASE("two-part identity sums to the rank of Q plus one") {
  const RankedPoset P = gen_boolean(2);
  const RankedPoset Q = gen_boolean(1);
  const ProductFamily A{{1, 0}, {0, 1}};
  CHECK(two_part_az_sum(P, Q, A).total == 2);
  const auto id = two_part_sperner_identity(P, Q, A);
  CHECK(id.total == id.expected);
  CHECK_THROWS_AS(two_part_az_sum(P, Q, ProductFamily{{1, 0}}), Error);
}

TEST_CASE("best transversal pairs large levels together") {
  const RankedPoset B = gen_boolean(2);
  const auto r = best_full_transversal(B, B);
  CHECK(r.size == 6);
  CHECK(well_paired_size(B, B) == 6);
  const ProductFamily H = homogeneous_family(B, B, r.transversal);
  CHECK(H.size() == 6);
  CHECK(is_two_part_sperner(B, B, H).holds);
  CHECK(is_well_paired(B, B, H));
}

TEST_CASE("exact maximum on B_2 x B_2") {
  const RankedPoset B = gen_boolean(2);
  const auto all = max_two_part_sperner_exact(B, B, true);
  CHECK(all.size == 6);
  CHECK(all.families.size() == 2);
  const auto one = max_two_part_sperner_exact(B, B, false);
  CHECK(one.size == 6);
  CHECK(one.families.size() == 1);
}

TEST_CASE("strict two-part property") {
  const RankedPoset B = gen_boolean(2);
  const auto r = verify_strict_two_part(B, generate("chains:3"), true);
  CHECK(r.holds);
  CHECK(r.non_homogeneous_maxima == 0);
  CHECK_THROWS_AS(verify_strict_two_part(gen_fig1a(), B, true), Error);
}

TEST_CASE("chain pair bound") {
  const RankedPoset B = gen_boolean(2);
  const ProductFamily F = well_paired_family(B, B);
  const std::vector<ElementId> c{0, 1, 3};
  const auto b = chain_pair_bound(B, B, F, c, c);
  CHECK(b.count <= b.bound);
  CHECK(b.bound == 3);
  CHECK_THROWS_AS(chain_pair_bound(B, B, F, std::vector<ElementId>{0, 3}, c), Error);
  CHECK(two_part_lym(B, B, F) == 3);
}

TEST_CASE("product family json round trip") {
  const ProductFamily F{{0, 1}, {2, 0}};
  CHECK(product_family_from_json(to_json(F)) == F);
}
