#include <doctest.h>

#include "azposet/error.hpp"
#include "azposet/families.hpp"
#include "azposet/properties.hpp"

using namespace azposet;

TEST_CASE("boolean lattice whitney numbers are binomials") {
  CHECK(gen_boolean(4).whitney_numbers() == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
}

TEST_CASE("subspace lattice whitney numbers are gaussian binomials") {
  CHECK(gen_subspace_lattice(3, 2).whitney_numbers() == std::vector<std::uint64_t>{1, 7, 7, 1});
  CHECK(gen_subspace_lattice(2, 3).whitney_numbers() == std::vector<std::uint64_t>{1, 4, 1});
  CHECK(gen_subspace_lattice(2, 4).whitney_numbers() == std::vector<std::uint64_t>{1, 5, 1});
}

TEST_CASE("subspace lattice rejects non prime powers") {
  CHECK_THROWS_AS(gen_subspace_lattice(2, 6), Error);
}

TEST_CASE("affine poset sizes") {
  CHECK(gen_affine_poset(2, 2).whitney_numbers() == std::vector<std::uint64_t>{4, 6, 1});
}

TEST_CASE("star power and chain product") {
  CHECK(gen_star_power(2, 2).whitney_numbers() == std::vector<std::uint64_t>{1, 4, 4});
  CHECK(gen_chain_product({3, 2}).whitney_numbers() == std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(chain_product_condition(std::vector<unsigned>{3, 3}));
  CHECK_FALSE(chain_product_condition(std::vector<unsigned>{3, 2}));
}

TEST_CASE("divisor lattice") {
  const RankedPoset D = gen_divisor_lattice(12);
  CHECK(D.whitney_numbers() == std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(D.find_label("12").has_value());
}

TEST_CASE("truncation and product") {
  const RankedPoset T = truncate(gen_boolean(4), 1, 3);
  CHECK(T.whitney_numbers() == std::vector<std::uint64_t>{4, 6, 4});
  const RankedPoset X = product(gen_boolean(1), gen_boolean(1));
  CHECK(X.whitney_numbers() == std::vector<std::uint64_t>{1, 2, 1});
}

TEST_CASE("figure posets") {
  const RankedPoset A = gen_fig1a();
  CHECK(A.whitney_numbers() == std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(A.is_u_poset());
  CHECK_FALSE(check_regular(A).holds);
  CHECK(check_normal(gen_fig1b(), NormalityMode::Flow).holds);
  CHECK_FALSE(check_level_connected(gen_fig1b()).holds);
}

TEST_CASE("spec strings round trip through the parser") {
  for (const char* text : {"boolean:3", "star:2,3", "subspace:2,3", "affine:2,2", "chains:3,2", "divisor:30"}) {
    CAPTURE(text);
    CHECK(parse_family_spec(text).to_string() == text);
  }
  CHECK(generate("trunc(boolean:4,1,3)").size() == 14);
  CHECK(generate("prod(chains:3,boolean:2)").size() == 12);
}

TEST_CASE("bad spec strings are rejected") {
  CHECK_THROWS_AS(generate("boolean"), Error);
  CHECK_THROWS_AS(generate("nosuch:3"), Error);
  CHECK_THROWS_AS(generate("trunc(boolean:3,2,1)"), Error);
}
