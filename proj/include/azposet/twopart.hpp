#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "azposet/poset.hpp"
#include "azposet/rational.hpp"

namespace azposet {

using ProductMember = std::pair<ElementId, ElementId>;

/// A set of pairs (p, q) with p in P and q in Q, kept sorted and unique.
class ProductFamily {
 public:
  ProductFamily() = default;
  ProductFamily(std::initializer_list<ProductMember> members);
  explicit ProductFamily(std::vector<ProductMember> members);

  const std::vector<ProductMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(ProductMember m) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// {a : (a, q) in F}
  Family slice_at_q(ElementId q) const;
  /// {b : (p, b) in F}
  Family slice_at_p(ElementId p) const;

  /// Pairs with the coordinates exchanged.
  ProductFamily swapped() const;

  bool operator==(const ProductFamily&) const = default;
  auto operator<=>(const ProductFamily&) const = default;

 private:
  std::vector<ProductMember> members_;
};

void require_members(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& F);

struct TwoPartReport {
  bool holds = false;
  /// Distinct members (x, y) <= (u, v) sharing a coordinate.
  std::optional<std::pair<ProductMember, ProductMember>> violation;
};

/// Pairwise definition: no distinct members (x, y) <= (u, v) with x = u or y = v.
TwoPartReport is_two_part_sperner(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& F);

/// Slice characterization: every slice in either coordinate is an antichain.
bool is_two_part_sperner_by_slices(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& F);

struct TwoPartAZ {
  Rational total;
  /// Contribution of each q in Q, indexed by id; each equals 1/N_{r(q)} when P is regular.
  std::vector<Rational> per_q;
};

/// Sum over (x, y) of W_{A(y)}(x) / (d⁻(x) N_{r(x)} M_{r(y)}), with the term at
/// (bottom, y) fixed to 1/M_{r(y)} when the bottom lies in A(y). Requires P
/// to be a U-poset, Q graded, and every slice A(y) nonempty (EmptySlice).
TwoPartAZ two_part_az_sum(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& A);

struct TwoPartIdentity {
  Rational lym_part;
  Rational remainder;
  Rational total;
  /// True when the roles of P and Q were exchanged because r(Q) > r(P).
  bool swapped = false;
  Rational expected;  // min(r(P), r(Q)) + 1
};

/// Splits the two-part identity sum of a 2-part Sperner A into its members
/// and the rest. Throws NotTwoPartSperner and EmptySlice.
TwoPartIdentity two_part_sperner_identity(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& A);

/// Level-index pairs (i of P, j of Q) with pairwise distinct components.
struct Transversal {
  std::vector<std::pair<Rank, Rank>> pairs;
  bool full = false;
};

struct TransversalResult {
  Transversal transversal;
  BigInt size;  // sum of N_i M_j over the pairs
};

/// Full transversal maximizing sum N_i M_j. Exhaustive over injections when
/// the longer poset has at most 8 levels, otherwise built pair by pair in
/// lexicographic order with the sorted-pairing optimum of the remaining
/// levels as the target. Among optima the lexicographically smallest choice,
/// listed by the levels of the shorter poset (P on equal ranks), is returned.
TransversalResult best_full_transversal(const RankedPoset& P, const RankedPoset& Q);

/// Sorted Whitney numbers paired largest with largest over min(r(P), r(Q)) + 1 pairs.
BigInt well_paired_size(const RankedPoset& P, const RankedPoset& Q);

ProductFamily homogeneous_family(const RankedPoset& P, const RankedPoset& Q, const Transversal& T);

/// Union of P_i x Q_j over the best full transversal.
ProductFamily well_paired_family(const RankedPoset& P, const RankedPoset& Q);

/// When F is a union of full level products P_i x Q_j, those (i, j).
std::optional<Transversal> homogeneous_blocks(const RankedPoset& P, const RankedPoset& Q,
                                              const ProductFamily& F);

/// Homogeneous with blocks forming a full transversal.
bool is_well_paired(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& F);

inline constexpr std::size_t kMaxProductSingle = 64;
inline constexpr std::size_t kMaxProductAll = 36;

struct TwoPartMaximum {
  std::size_t size = 0;
  std::vector<ProductFamily> families;  // one, or every maximum
};

/// Maximum independent sets of the conflict graph on P x Q by branch and
/// bound with a greedy clique-cover bound. SizeLimit above 64 pairs (36 when
/// listing all maxima).
TwoPartMaximum max_two_part_sperner_exact(const RankedPoset& P, const RankedPoset& Q, bool enumerate_all);

struct StrictTwoPartReport {
  bool holds = false;
  std::size_t maximum_size = 0;
  BigInt well_paired_size;
  std::size_t maxima = 0;
  std::size_t non_homogeneous_maxima = 0;
  std::optional<ProductFamily> witness;
  std::vector<ProductFamily> families;
};

/// Lists every maximum 2-part Sperner family and checks each is well-paired.
/// Throws NotStrictlyNormal unless both factors are strictly normal (skipped
/// when `require_strictly_normal` is false) and SizeLimit above 36 pairs.
StrictTwoPartReport verify_strict_two_part(const RankedPoset& P, const RankedPoset& Q,
                                           bool require_strictly_normal = true);

/// Throws NotMaximalChain unless `chain` lists a maximal chain bottom-up.
void require_maximal_chain(const RankedPoset& P, std::span<const ElementId> chain);

struct ChainPairBound {
  std::size_t count = 0;  // |F ∩ (C1 x C2)|
  std::size_t bound = 0;  // min(r(P), r(Q)) + 1
};

ChainPairBound chain_pair_bound(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& F,
                                std::span<const ElementId> C1, std::span<const ElementId> C2);

/// Sum of 1/(N_{r(a)} M_{r(b)}) over F. Throws NotTwoPartSperner.
Rational two_part_lym(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& F);

nlohmann::json to_json(const ProductFamily& F);
ProductFamily product_family_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Transversal& T);

}  // namespace azposet
