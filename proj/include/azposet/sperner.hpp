#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "azposet/poset.hpp"
#include "azposet/rational.hpp"

namespace azposet {

struct KSpernerReport {
  bool holds = false;
  /// A chain of k+1 members of F, bottom-up, when the check fails.
  std::vector<ElementId> chain;
};

/// True iff F contains no chain of k+1 elements. Requires k >= 1.
KSpernerReport is_k_sperner(const RankedPoset& P, const Family& F, unsigned k);

bool is_antichain(const RankedPoset& P, const Family& F);

/// Length of the longest chain inside F (0 for the empty family).
std::size_t longest_chain_length(const RankedPoset& P, const Family& F);

struct AntichainDecomposition {
  std::vector<Family> parts;
};

/// Repeatedly peels off the minimal elements of F. Part j holds the members
/// whose longest chain inside F ending at them has j+1 elements.
AntichainDecomposition dual_dilworth_decompose(const RankedPoset& P, const Family& F);

/// Sum of 1/N_{r(a)} over the members of F.
Rational lym_sum(const RankedPoset& P, const Family& F);

inline constexpr std::size_t kMaxAntichainLimit = 2000;

struct MaxAntichainResult {
  Family antichain;
  /// A partition of P into as many chains as the antichain has members.
  std::vector<std::vector<ElementId>> chain_cover;
};

/// Maximum antichain and minimum chain cover from a maximum matching in the
/// split comparability graph. SizeLimit above kMaxAntichainLimit elements.
MaxAntichainResult max_antichain(const RankedPoset& P);

enum class StrictSpernerMode { Auto, Exhaustive, Oracle };

inline constexpr std::size_t kExhaustiveElementLimit = 24;
inline constexpr std::size_t kMaximaLimit = 1000000;

struct StrictSpernerReport {
  bool holds = false;
  StrictSpernerMode mode = StrictSpernerMode::Exhaustive;
  std::size_t maximum_size = 0;
  std::size_t maxima = 0;
  std::size_t non_homogeneous_maxima = 0;
  /// First non-homogeneous maximum k-Sperner family found.
  std::optional<Family> witness;
};

/// Whether every maximum k-Sperner family is a union of full levels.
/// Exhaustive mode handles up to kExhaustiveElementLimit elements and any k;
/// oracle mode handles k = 1 up to kMaxAntichainLimit elements by listing the
/// transversals of a minimum chain cover. SizeLimit otherwise.
StrictSpernerReport check_strict_k_sperner(const RankedPoset& P, unsigned k,
                                           StrictSpernerMode mode = StrictSpernerMode::Auto);

/// Every maximum k-Sperner family of P, by branch and bound (exhaustive mode
/// limits). SizeLimit when more than `cap` maxima exist.
std::vector<Family> maximum_k_sperner_families(const RankedPoset& P, unsigned k,
                                               std::size_t cap = kMaximaLimit);

enum class LymVerdict {
  InequalityStrict,  // sum < k, nothing is claimed
  Homogeneous,       // sum == k and F is a union of full levels
  Counterexample,    // sum == k but F is not homogeneous
  BoundExceeded,     // sum > k
};

struct StrictLymReport {
  LymVerdict verdict = LymVerdict::InequalityStrict;
  Rational sum;
};

/// Throws NotKSperner when F is not k-Sperner.
StrictLymReport check_strict_lym(const RankedPoset& P, const Family& F, unsigned k);

std::string_view to_string(StrictSpernerMode mode);
std::string_view to_string(LymVerdict verdict);

nlohmann::json certificate(const RankedPoset& P, const StrictSpernerReport& report);

}  // namespace azposet
