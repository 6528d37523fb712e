#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "azposet/poset.hpp"
#include "azposet/properties.hpp"
#include "azposet/rational.hpp"

namespace azposet {

/// |lower covers of x outside the upset of A|, which equals
/// |Γ⁻(x) \ Γ⁺_{r(x)-1}(A^x)| for A^x = {a in A : a <= x} nonempty, and 0
/// when A^x is empty.
std::uint64_t compute_W(const RankedPoset& P, const Family& A, ElementId x);

/// W for every element at once, indexed by id.
std::vector<std::uint64_t> compute_W_all(const RankedPoset& P, const Family& A);

struct AZTerm {
  ElementId x = 0;
  std::uint64_t W = 0;
  Rational term;
  bool convention_bottom = false;  // term fixed to 1 because the bottom lies in A
  bool in_A = false;
  bool in_upset = false;
};

struct AZBreakdown {
  Rational total;
  std::vector<AZTerm> terms;  // one per element, in id order
  bool regular = false;
  bool equals_one() const { return total == 1; }
};

/// Sum over x of W_A(x) / (d⁻(x) N_{r(x)}), with the bottom term set to 1
/// when the bottom is in A. Requires a U-poset and a nonempty A. The raw sum
/// is returned for non-regular posets too.
AZBreakdown az_identity_sum(const RankedPoset& P, const Family& A);

struct KeyLemmaResult {
  Rational total;
  /// az_identity_sum on the poset with a new bottom and top adjoined.
  Rational bounded_total;
};

/// Sum of f_A over a regular poset: 0 on P_0 \ A, 1/N_0 on P_0 ∩ A, 1/N_r on
/// P_r outside the upset of A, and W_A(x) / (d⁻ N) elsewhere. The P_r case
/// takes precedence when r = 0. Throws NotRegular and EmptyFamily.
KeyLemmaResult key_lemma_sum(const RankedPoset& P, const Family& A);

struct AntichainAZ {
  Rational lym_part;
  Rational remainder_part;
  Rational total() const { return lym_part + remainder_part; }
};

/// Splits the identity sum of an antichain A into the members of A and the
/// rest. Throws NotAntichain.
AntichainAZ antichain_az(const RankedPoset& P, const Family& A);

struct KSpernerAZ {
  std::vector<Family> parts;
  Rational lym_part;                 // sum of 1/N over F
  std::vector<Rational> remainders;  // per part, over elements outside it
  Rational total;
};

/// Decomposes a k-Sperner F into exactly k antichains (dual Dilworth peeling,
/// with parts split further when F has fewer than k levels of height) and
/// adds the per-antichain identities. Throws NotKSperner, and InvalidInput
/// when |F| < k.
KSpernerAZ k_sperner_az(const RankedPoset& P, const Family& F, unsigned k);

/// sum over j = 0..l-k of λ_{k+j}(k,l) / (d⁻_{k+j} N_{k+j}) * (d⁻_{k+j} - λ_{k+j-1}(k,k+j)).
/// For k = 0 the j = 0 term is λ_0(0,l)/N_0. Throws NotStronglyRegular when
/// P is not regular.
Rational beta(const RankedPoset& P, const LambdaTable& lambda, Rank k, Rank l);
/// Builds the table first.
Rational beta(const RankedPoset& P, Rank k, Rank l);

struct SkewPairSystem {
  std::vector<std::pair<ElementId, ElementId>> pairs;
};

struct SecondAZResult {
  std::vector<Rational> betas;
  Rational beta_sum;
  Rational remainder;  // over the upset of A minus the downset of B
  Rational total;
};

/// Throws SkewViolation unless a_i <= b_j exactly when i = j, then
/// IntervalOverlap when two intervals [a_i, b_i] meet, and NotStronglyRegular.
SecondAZResult second_az_identity(const RankedPoset& P, const SkewPairSystem& sys);

/// Checks the skew condition and interval disjointness without evaluating.
void validate_skew_system(const RankedPoset& P, const SkewPairSystem& sys);

nlohmann::json to_json(const RankedPoset& P, const AZBreakdown& breakdown);

}  // namespace azposet
