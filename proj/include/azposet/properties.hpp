#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "azposet/poset.hpp"
#include "azposet/rational.hpp"

namespace azposet {

// ---------------------------------------------------------------- regularity

/// Lower and upper degree of every level, present only when uniform.
struct DegreeProfile {
  std::vector<std::size_t> lower;
  std::vector<std::size_t> upper;
};

struct DegreeViolation {
  Rank rank = 0;
  bool lower = true;  // which degree differs
  ElementId first = 0;
  ElementId second = 0;
  std::size_t first_degree = 0;
  std::size_t second_degree = 0;
};

struct RegularityReport {
  bool holds = false;
  std::optional<DegreeProfile> profile;
  std::optional<DegreeViolation> violation;
};

/// Lower degrees are scanned over every level before upper degrees, so the
/// reported witness is the lowest level whose lower degrees disagree.
RegularityReport check_regular(const RankedPoset& P);

/// N_k * d-_1 ... d-_k == N_0 * d+_0 ... d+_{k-1} for every level k, in
/// exact arithmetic. Meaningful for regular posets only.
bool check_level_size_identity(const RankedPoset& P, const DegreeProfile& profile);

// ---------------------------------------------------------------- normality

enum class NormalityMode { Enumerate, Flow };

/// Largest level size accepted by subset enumeration.
inline constexpr std::size_t kEnumerationLevelLimit = 22;

struct NormalityReport {
  bool holds = false;
  /// level_holds[i] for i >= 1 covers the pair of levels i-1 and i; entry 0 is always true.
  std::vector<bool> level_holds;
  /// Failing level i and A within it with |A| / N_i > |lower shadow| / N_{i-1}.
  std::optional<Rank> witness_level;
  Family witness;
};

/// Normalized matching between every pair of consecutive levels.
NormalityReport check_normal(const RankedPoset& P, NormalityMode mode);

enum class StrictNormalityPath { RegularAndLevelConnected, Enumeration };

struct StrictNormalityReport {
  bool holds = false;
  StrictNormalityPath path = StrictNormalityPath::Enumeration;
  /// Nonempty proper A within witness_level with |A| / N_i >= |shadow| / N_{i-1}.
  std::optional<Rank> witness_level;
  Family witness;
};

/// Strict normalized matching for nonempty proper subsets of each level
/// above 0. Regular level-connected posets are accepted without enumerating.
StrictNormalityReport check_strictly_normal(const RankedPoset& P);

struct LevelConnectivityReport {
  bool holds = false;
  /// Smallest i whose bipartite cover graph between levels i and i+1 is disconnected.
  std::optional<Rank> first_disconnected;
};

LevelConnectivityReport check_level_connected(const RankedPoset& P);

// ---------------------------------------------------------------- strong regularity

/// lambda_i(k, l): number of rank-i elements in an interval [a, b] with
/// r(a) = k, r(b) = l. Zero for every triple outside k <= i <= l <= r.
class LambdaTable {
 public:
  LambdaTable() = default;
  explicit LambdaTable(Rank max_rank);

  std::uint64_t operator()(long long i, long long k, long long l) const;
  void set(Rank i, Rank k, Rank l, std::uint64_t value);
  Rank max_rank() const { return max_rank_; }

 private:
  std::size_t slot(Rank i, Rank k, Rank l) const;

  Rank max_rank_ = 0;
  std::vector<std::uint64_t> data_;
};

struct StrongRegularityViolation {
  Rank i = 0, k = 0, l = 0;
  std::pair<ElementId, ElementId> first_pair, second_pair;
  std::uint64_t first_count = 0, second_count = 0;
};

struct StrongRegularityReport {
  bool holds = false;
  std::optional<LambdaTable> table;
  std::optional<StrongRegularityViolation> violation;
};

/// Requires a U-poset.
StrongRegularityReport check_strongly_regular(const RankedPoset& P);

// ---------------------------------------------------------------- chain coverings

/// Transition weights g on cover edges. A maximal chain x_0 < ... < x_r has
/// weight (1/N_0) * prod g(x_j, x_{j+1}) N_j.
class ChainCovering {
 public:
  ChainCovering() = default;
  explicit ChainCovering(std::vector<Rational> weights) : weights_(std::move(weights)) {}

  /// Indexed like RankedPoset::covers().
  const std::vector<Rational>& weights() const { return weights_; }
  std::vector<Rational>& weights() { return weights_; }
  const Rational& weight(const RankedPoset& P, ElementId lo, ElementId hi) const;

  Rational chain_weight(const RankedPoset& P, std::span<const ElementId> chain) const;

 private:
  std::vector<Rational> weights_;
};

/// Solves one transportation problem per pair of consecutive levels as an
/// integer max flow. Throws NotNormal when some level pair is infeasible.
ChainCovering build_chain_covering(const RankedPoset& P);

struct CoveringVerification {
  bool holds = false;
  bool marginals_hold = false;  // edge-weight row/column sums and signs
  bool chains_hold = false;     // total mass 1 and mass 1/N through each element
  Rational total_mass;
  std::optional<ElementId> violated_element;
};

/// Checks both the edge marginals and, by enumerating every maximal chain
/// (ChainLimit above `chain_cap`), the chain-level conditions.
CoveringVerification verify_chain_covering(const RankedPoset& P, const ChainCovering& cov,
                                           std::size_t chain_cap = 100000);

// ---------------------------------------------------------------- certificates

/// {property, holds, witness: [...] | null, profile | lambda_table}
nlohmann::json certificate(const RankedPoset& P, const RegularityReport& report);
nlohmann::json certificate(const RankedPoset& P, const NormalityReport& report);
nlohmann::json certificate(const RankedPoset& P, const StrictNormalityReport& report);
nlohmann::json certificate(const RankedPoset& P, const LevelConnectivityReport& report);
nlohmann::json certificate(const RankedPoset& P, const StrongRegularityReport& report);

}  // namespace azposet
