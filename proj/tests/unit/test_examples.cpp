#include <doctest.h>

#include "azposet/az.hpp"
#include "azposet/error.hpp"
#include "azposet/families.hpp"
#include "azposet/properties.hpp"
#include "azposet/sperner.hpp"

using namespace azposet;

namespace {

ElementId id(const RankedPoset& P, const char* label) {
  const auto found = P.find_label(label);
  REQUIRE(found.has_value());
  return *found;
}

}  // namespace

TEST_CASE("one point poset") {
  const RankedPoset P = build_poset("pt", {{0, 0, "o"}}, {});
  CHECK(P.is_graded());
  CHECK(P.is_u_poset());
  CHECK(P.max_rank() == 0);
}

TEST_CASE("shadow of the right rank two element of the irregular figure") {
  const RankedPoset A = gen_fig1a();
  CHECK(gamma_down(A, id(A, "b")) == Family{id(A, "p"), id(A, "c")});
  CHECK(gamma_down(gen_boolean(2), 3) == Family{1, 2});
  CHECK(gamma_down(gen_boolean(2), 0).empty());
  CHECK(gamma_up_set_to_level(A, Family{id(A, "c")}, 1) == Family{id(A, "c")});
  CHECK(gamma_up_set_to_level(gen_boolean(3), Family{}, 2).empty());
}

TEST_CASE("boundary edges of an upset in B_2") {
  const auto edges = boundary_edges(gen_boolean(2), Family{1});
  REQUIRE(edges.size() == 2);
  CHECK(edges.at(1) == std::vector<ElementId>{0});
  CHECK(edges.at(3) == std::vector<ElementId>{2});
  CHECK(boundary_edges(gen_boolean(2), Family{}).empty());
}

TEST_CASE("chain product conditions") {
  const RankedPoset C = generate("chains:3,2,2");
  CHECK_FALSE(check_regular(C).holds);
  const auto s = check_strictly_normal(C);
  CHECK(s.holds);
  CHECK(s.path == StrictNormalityPath::Enumeration);
  CHECK(check_regular(gen_star_power(2, 3)).holds);
  CHECK(check_level_connected(gen_star_power(2, 3)).holds);
  CHECK(gen_affine_poset(1, 2).whitney_numbers() == std::vector<std::uint64_t>{2, 1});
}

TEST_CASE("figure posets are not strictly normal") {
  const auto b = check_strictly_normal(gen_fig1b());
  CHECK_FALSE(b.holds);
  CHECK(b.witness_level == 2);
  CHECK_FALSE(check_strict_k_sperner(gen_fig1b(), 1).holds);
}

TEST_CASE("perturbed covering is rejected") {
  const RankedPoset B = gen_boolean(3);
  auto cov = build_chain_covering(B);
  cov.weights()[0] += make_rational(1, 1000);
  const auto v = verify_chain_covering(B, cov);
  CHECK_FALSE(v.holds);
  CHECK(v.violated_element.has_value());
  CHECK(verify_chain_covering(generate("chains:3,2"), build_chain_covering(generate("chains:3,2"))).holds);
}

TEST_CASE("decomposition examples") {
  const RankedPoset B = gen_boolean(3);
  std::vector<ElementId> ids;
  for (Rank r : {1u, 2u}) {
    for (ElementId x : B.level(r)) ids.push_back(x);
  }
  const auto d = dual_dilworth_decompose(B, Family(ids));
  REQUIRE(d.parts.size() == 2);
  CHECK(d.parts[0] == level_family(B, 1));
  CHECK(d.parts[1] == level_family(B, 2));
  CHECK(dual_dilworth_decompose(B, level_family(B, 1)).parts.size() == 1);
  const RankedPoset C = generate("chains:4");
  CHECK(max_antichain(C).antichain.size() == 1);
}

TEST_CASE("lym sums") {
  const RankedPoset B = gen_boolean(3);
  CHECK(lym_sum(B, Family{0, 7}) == 2);
  CHECK(lym_sum(B, Family{1, 6}) == make_rational(2, 3));
  const RankedPoset L = gen_subspace_lattice(3, 2);
  std::vector<ElementId> mid;
  for (Rank r : {1u, 2u}) {
    for (ElementId x : L.level(r)) mid.push_back(x);
  }
  const auto lym = check_strict_lym(L, Family(mid), 2);
  CHECK(lym.sum == 2);
  CHECK(lym.verdict == LymVerdict::Homogeneous);
}

TEST_CASE("identity breakdown on B_2") {
  const RankedPoset B = gen_boolean(2);
  const auto b = az_identity_sum(B, Family{1});
  CHECK(b.terms[1].term == make_rational(1, 2));
  CHECK(b.terms[3].term == make_rational(1, 2));
  CHECK(b.total == 1);
  const auto split = antichain_az(B, Family{1});
  CHECK(split.lym_part == make_rational(1, 2));
  CHECK(split.remainder_part == make_rational(1, 2));
  CHECK(k_sperner_az(B, Family{0}, 1).total == 1);
}

TEST_CASE("key lemma on the affine plane") {
  const RankedPoset A = gen_affine_poset(2, 2);
  CHECK(key_lemma_sum(A, Family{A.level(0)[0]}).total == 1);
  CHECK(key_lemma_sum(A, level_family(A, 0)).total == 1);
}

TEST_CASE("beta examples") {
  const RankedPoset B = gen_boolean(3);
  CHECK(beta(B, 1, 2) == make_rational(1, 2));
  for (Rank k = 0; k <= 3; ++k) CHECK(beta(B, k, k) == Rational(1, B.whitney(k)));
  const auto whole_interval = second_az_identity(B, SkewPairSystem{{{0, 7}}});
  CHECK(whole_interval.betas.front() == 1);
  CHECK(whole_interval.remainder == 0);
}
