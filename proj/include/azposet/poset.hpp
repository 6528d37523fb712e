#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "azposet/error.hpp"
#include "azposet/rational.hpp"

namespace azposet {

using ElementId = std::uint32_t;
using Rank = std::uint32_t;

struct CoverEdge {
  ElementId lo = 0;
  ElementId hi = 0;
  auto operator<=>(const CoverEdge&) const = default;
};

struct ElementSpec {
  ElementId id = 0;
  Rank rank = 0;
  std::string label;  // optional, empty means "use the id"
};

/// A set of element ids of one poset, kept sorted and unique.
class Family {
 public:
  Family() = default;
  Family(std::initializer_list<ElementId> ids);
  explicit Family(std::vector<ElementId> ids);

  std::span<const ElementId> members() const { return ids_; }
  const std::vector<ElementId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(ElementId id) const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool operator==(const Family&) const = default;
  auto operator<=>(const Family&) const = default;

 private:
  std::vector<ElementId> ids_;
};

/// Graded-or-not poset given by its Hasse diagram, with an explicit rank
/// function whose cover edges always step up exactly one rank.
///
/// Instances are immutable. The reachability closure is built lazily on the
/// first order query and shared between copies; concurrent readers are safe.
class RankedPoset {
 public:
  /// Posets larger than this answer order queries by search instead of a
  /// precomputed closure.
  static constexpr std::size_t kClosureLimit = 12000;

  RankedPoset() = default;

  const std::string& name() const { return name_; }
  std::size_t size() const { return ranks_.size(); }
  Rank rank(ElementId a) const { return ranks_.at(a); }
  Rank max_rank() const { return static_cast<Rank>(levels_.size()) - 1; }
  std::size_t num_levels() const { return levels_.size(); }

  std::span<const ElementId> level(Rank i) const { return levels_.at(i); }
  std::uint64_t whitney(Rank i) const { return levels_.at(i).size(); }
  std::vector<std::uint64_t> whitney_numbers() const;

  std::span<const ElementId> lower_covers(ElementId a) const { return down_.at(a); }
  std::span<const ElementId> upper_covers(ElementId a) const { return up_.at(a); }
  std::size_t lower_degree(ElementId a) const { return down_.at(a).size(); }
  std::size_t upper_degree(ElementId a) const { return up_.at(a).size(); }

  /// Sorted by (lo, hi).
  const std::vector<CoverEdge>& covers() const { return covers_; }
  std::optional<std::size_t> cover_index(ElementId lo, ElementId hi) const;

  /// Every minimal element has rank 0 and every maximal one rank r.
  bool is_graded() const { return graded_; }
  /// Graded with a single element at rank 0 and at rank r.
  bool is_u_poset() const { return graded_ && levels_.front().size() == 1 && levels_.back().size() == 1; }
  ElementId bottom() const;
  ElementId top() const;

  bool leq(ElementId a, ElementId b) const;
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(ElementId a) const;
  std::optional<ElementId> find_label(std::string_view text) const;

  bool contains(ElementId a) const { return a < ranks_.size(); }

  void require_graded(std::string_view op) const;
  void require_u_poset(std::string_view op) const;
  void require_member(ElementId a) const;
  void require_members(const Family& family) const;

  friend RankedPoset build_poset(std::string name, std::vector<ElementSpec> elements,
                                 std::vector<CoverEdge> covers);

 private:
  struct Closure;
  struct ClosureCache;

  const Closure& closure() const;
  bool leq_by_search(ElementId a, ElementId b) const;

  std::string name_;
  std::vector<Rank> ranks_;
  std::vector<std::string> labels_;
  std::vector<std::vector<ElementId>> levels_;
  std::vector<std::vector<ElementId>> down_;
  std::vector<std::vector<ElementId>> up_;
  std::vector<CoverEdge> covers_;
  bool graded_ = false;
  std::shared_ptr<ClosureCache> cache_;
};

/// Validates and assembles a poset. Element ids must be exactly 0..n-1 and
/// every rank between 0 and the maximum must be occupied.
RankedPoset build_poset(std::string name, std::vector<ElementSpec> elements,
                        std::vector<CoverEdge> covers);

/// Elements covered by a (the lower neighbourhood).
Family gamma_down(const RankedPoset& P, ElementId a);
/// Elements covering a.
Family gamma_up(const RankedPoset& P, ElementId a);

/// Rank-i elements above some member of A. Empty for i outside [0, r].
Family gamma_up_set_to_level(const RankedPoset& P, const Family& A, long long i);
/// Rank-i elements below some member of A. Empty for i outside [0, r].
Family gamma_down_set_to_level(const RankedPoset& P, const Family& A, long long i);

Family upset(const RankedPoset& P, const Family& A);
Family downset(const RankedPoset& P, const Family& A);

/// Membership mask of the upset of A, indexed by element id.
std::vector<char> upset_mask(const RankedPoset& P, const Family& A);

struct ChainCounts {
  BigInt total;
  std::vector<BigInt> from_bottom;  // saturated chains from rank 0 ending at a
  std::vector<BigInt> to_top;       // saturated chains from a to rank r
  std::vector<BigInt> through;      // maximal chains through a
};

ChainCounts count_maximal_chains(const RankedPoset& P);

/// Every maximal chain listed bottom-up. Throws ChainLimit above `cap`.
std::vector<std::vector<ElementId>> enumerate_maximal_chains(const RankedPoset& P,
                                                             std::size_t cap = 100000);

/// Cover edges (v, u) with u in the upset of A and v outside it, grouped by u.
std::map<ElementId, std::vector<ElementId>> boundary_edges(const RankedPoset& P, const Family& A);

/// Adds a new minimum below rank 0 and a new maximum above rank r. Original
/// element ids are preserved; the new bottom and top get ids n and n+1.
RankedPoset adjoin_bounds(const RankedPoset& P);

/// All elements of P as a family.
Family whole(const RankedPoset& P);
/// The i-th level as a family.
Family level_family(const RankedPoset& P, Rank i);

/// True when F is a union of complete levels.
bool is_homogeneous(const RankedPoset& P, const Family& F);

}  // namespace azposet
