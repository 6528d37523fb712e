#pragma once

#include <cstdint>
#include <vector>

#include "azposet/poset.hpp"
#include "azposet/rational.hpp"
#include "azposet/twopart.hpp"

// Brute-force reference computations. They rely only on ranks, cover lists
// and order queries of RankedPoset, never on the algorithms they check.
namespace azposet::oracle {

/// Every maximal chain, bottom-up, by depth-first search over covers.
std::vector<std::vector<ElementId>> maximal_chains(const RankedPoset& P);

/// For each element x, the fraction of maximal chains whose first element
/// inside the upset of A is x. Sums to 1 whenever the top lies in the upset.
std::vector<Rational> chain_entry_ratios(const RankedPoset& P, const Family& A,
                                         const std::vector<std::vector<ElementId>>& chains);

BigInt binomial(unsigned n, unsigned k);

/// [n choose k]_q by the recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
BigInt gaussian_binomial(unsigned n, unsigned k, unsigned q);

/// Sum over a <= x <= b of W_{a}(x) / (d⁻(x) N_{r(x)}), with the term at
/// x = a equal to 1/N_{r(a)}.
Rational interval_beta(const RankedPoset& P, ElementId a, ElementId b);

/// W_A(x) = |{y covered by x : no a in A with a <= y}| when some a <= x.
std::uint64_t brute_W(const RankedPoset& P, const Family& A, ElementId x);

struct SubsetMaxima {
  std::size_t size = 0;
  std::vector<Family> families;
};

/// All maximum k-Sperner families by scanning every subset (at most 18 elements).
SubsetMaxima max_k_sperner_by_subsets(const RankedPoset& P, unsigned k);

/// All maximum 2-part Sperner families by scanning every subset of P x Q
/// (at most 20 pairs).
struct ProductMaxima {
  std::size_t size = 0;
  std::vector<ProductFamily> families;
};
ProductMaxima max_two_part_by_subsets(const RankedPoset& P, const RankedPoset& Q);

/// Value of every injection of the levels of the shorter poset into those of
/// the longer one, in lexicographic order of the injection.
std::vector<BigInt> transversal_values(const RankedPoset& P, const RankedPoset& Q);

/// Rank- and cover-preserving bijection search.
bool isomorphic(const RankedPoset& P, const RankedPoset& Q);

/// Graded poset with the given level sizes; each element above rank 0 gets
/// at least one lower cover and each element below the top at least one
/// upper cover, further covers appear with probability `density`.
RankedPoset random_graded_poset(const std::vector<unsigned>& level_sizes, double density, std::uint64_t seed);

/// Two rank-0 and three rank-1 elements where one bottom element lies only
/// under the first rank-1 element, so {y, z} has too small a shadow.
RankedPoset non_normal_example();

}  // namespace azposet::oracle
