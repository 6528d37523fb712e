#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "azposet/poset.hpp"

namespace azposet {

/// Generators refuse to build more elements than this (Boolean lattices
/// have their own cap, n <= 20).
inline constexpr std::size_t kMaxGeneratedElements = 100000;

/// Subsets of {1..n} ordered by inclusion.
RankedPoset gen_boolean(unsigned n);

/// n-th direct power of the star with k leaves: tuples in {0..k}^n, x <= y
/// iff y agrees with x on every nonzero coordinate of x.
RankedPoset gen_star_power(unsigned k, unsigned n);

/// Subspaces of GF(q)^n, one element per reduced row-echelon basis.
RankedPoset gen_subspace_lattice(unsigned n, unsigned q);

/// Affine subspaces v + U of GF(q)^n (the empty set excluded), ordered by
/// inclusion. Rank is dim U, so the q^n points are the minimal elements.
RankedPoset gen_affine_poset(unsigned n, unsigned q);

/// Product of chains with the given numbers of elements (non-increasing).
RankedPoset gen_chain_product(std::vector<unsigned> sizes);

/// k_2 + ... + k_n >= k_1, the condition under which a chain product is
/// known to be strictly normal.
bool chain_product_condition(std::span<const unsigned> sizes);

/// Divisors of m ordered by divisibility, ranked by prime factors counted
/// with multiplicity.
RankedPoset gen_divisor_lattice(std::uint64_t m);

/// Levels l..m of P, re-ranked from 0.
RankedPoset truncate(const RankedPoset& P, Rank l, Rank m);

/// Componentwise order on P x Q; element (x, y) gets id x * |Q| + y.
RankedPoset product(const RankedPoset& P, const RankedPoset& Q);

/// The two six-element posets z < {p, c} < {a, b} < t. Both have covers
/// z-p, z-c, p-a, c-b, a-t, b-t; fig1a additionally has p-b.
RankedPoset gen_fig1a();
RankedPoset gen_fig1b();

struct FamilySpec {
  enum class Kind {
    Boolean,
    StarPower,
    ChainProduct,
    DivisorLattice,
    SubspaceLattice,
    AffinePoset,
    Truncated,
    Fig1a,
    Fig1b,
    ProductOf,
  };

  Kind kind = Kind::Boolean;
  std::vector<std::uint64_t> params;
  std::vector<FamilySpec> children;

  /// Canonical text form, e.g. "trunc(boolean:5,1,3)".
  std::string to_string() const;
};

/// Parses strings such as "boolean:4", "star:2,3", "chains:3,2,2",
/// "subspace:3,2", "affine:2,2", "divisor:360", "trunc(boolean:5,1,3)",
/// "fig1a" and "prod(boolean:3,chains:3,2)".
FamilySpec parse_family_spec(std::string_view text);

RankedPoset generate(const FamilySpec& spec);
RankedPoset generate(std::string_view spec);

}  // namespace azposet
