#include "azposet/poset.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace azposet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::CoverRankError: return "CoverRankError";
    case ErrorCode::CycleError: return "CycleError";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::NotGraded: return "NotGraded";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::LevelTooLarge: return "LevelTooLarge";
    case ErrorCode::NotUPoset: return "NotUPoset";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotStronglyRegular: return "NotStronglyRegular";
    case ErrorCode::NotStrictlyNormal: return "NotStrictlyNormal";
    case ErrorCode::ChainLimit: return "ChainLimit";
    case ErrorCode::NotAntichain: return "NotAntichain";
    case ErrorCode::NotKSperner: return "NotKSperner";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::SkewViolation: return "SkewViolation";
    case ErrorCode::IntervalOverlap: return "IntervalOverlap";
    case ErrorCode::EmptySlice: return "EmptySlice";
    case ErrorCode::NotTwoPartSperner: return "NotTwoPartSperner";
    case ErrorCode::NotMaximalChain: return "NotMaximalChain";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Family

Family::Family(std::initializer_list<ElementId> ids) : Family(std::vector<ElementId>(ids)) {}

Family::Family(std::vector<ElementId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool Family::contains(ElementId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

// ---------------------------------------------------------------- closure

struct RankedPoset::Closure {
  std::size_t words = 0;
  std::vector<std::uint64_t> above;  // row a: every x with a <= x
};

struct RankedPoset::ClosureCache {
  std::once_flag once;
  Closure data;
};

const RankedPoset::Closure& RankedPoset::closure() const {
  std::call_once(cache_->once, [this] {
    Closure& c = cache_->data;
    const std::size_t n = size();
    c.words = (n + 63) / 64;
    c.above.assign(n * c.words, 0);
    for (Rank r = max_rank() + 1; r-- > 0;) {
      for (ElementId a : levels_[r]) {
        std::uint64_t* row = &c.above[a * c.words];
        row[a / 64] |= std::uint64_t{1} << (a % 64);
        for (ElementId b : up_[a]) {
          const std::uint64_t* other = &c.above[b * c.words];
          for (std::size_t w = 0; w < c.words; ++w) row[w] |= other[w];
        }
      }
    }
  });
  return cache_->data;
}

bool RankedPoset::leq_by_search(ElementId a, ElementId b) const {
  const Rank ra = ranks_[a];
  if (ranks_[b] < ra) return false;
  std::vector<char> seen(size(), 0);
  std::vector<ElementId> stack{b};
  seen[b] = 1;
  while (!stack.empty()) {
    ElementId x = stack.back();
    stack.pop_back();
    if (x == a) return true;
    if (ranks_[x] == ra) continue;
    for (ElementId y : down_[x]) {
      if (!seen[y] && ranks_[y] >= ra) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return false;
}

bool RankedPoset::leq(ElementId a, ElementId b) const {
  if (a == b) return true;
  if (ranks_[b] <= ranks_[a]) return false;
  if (size() > kClosureLimit) return leq_by_search(a, b);
  const Closure& c = closure();
  return (c.above[a * c.words + b / 64] >> (b % 64)) & 1U;
}

// ---------------------------------------------------------------- accessors

std::vector<std::uint64_t> RankedPoset::whitney_numbers() const {
  std::vector<std::uint64_t> out;
  out.reserve(levels_.size());
  for (const auto& lv : levels_) out.push_back(lv.size());
  return out;
}

std::optional<std::size_t> RankedPoset::cover_index(ElementId lo, ElementId hi) const {
  const CoverEdge key{lo, hi};
  auto it = std::lower_bound(covers_.begin(), covers_.end(), key);
  if (it == covers_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - covers_.begin());
}

ElementId RankedPoset::bottom() const {
  require_u_poset("bottom");
  return levels_.front().front();
}

ElementId RankedPoset::top() const {
  require_u_poset("top");
  return levels_.back().front();
}

std::string RankedPoset::label(ElementId a) const {
  if (a < labels_.size() && !labels_[a].empty()) return labels_[a];
  return std::to_string(a);
}

std::optional<ElementId> RankedPoset::find_label(std::string_view text) const {
  for (ElementId a = 0; a < labels_.size(); ++a) {
    if (labels_[a] == text) return a;
  }
  return std::nullopt;
}

void RankedPoset::require_graded(std::string_view op) const {
  if (!graded_) {
    throw Error(ErrorCode::NotGraded, std::string(op) + " requires a graded poset, got '" + name_ + "'");
  }
}

void RankedPoset::require_u_poset(std::string_view op) const {
  if (!is_u_poset()) {
    throw Error(ErrorCode::NotUPoset,
                std::string(op) + " requires universal lower and upper bounds, got '" + name_ + "'");
  }
}

void RankedPoset::require_member(ElementId a) const {
  if (!contains(a)) {
    throw Error(ErrorCode::InvalidInput, "element " + std::to_string(a) + " not in '" + name_ + "'");
  }
}

void RankedPoset::require_members(const Family& family) const {
  for (ElementId a : family) require_member(a);
}

// ---------------------------------------------------------------- construction

RankedPoset build_poset(std::string name, std::vector<ElementSpec> elements,
                        std::vector<CoverEdge> covers) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "a poset needs at least one element");

  RankedPoset P;
  P.name_ = std::move(name);
  P.ranks_.assign(n, 0);
  std::vector<char> seen(n, 0);
  bool any_label = false;
  for (const auto& e : elements) {
    if (e.id >= n || seen[e.id]) {
      throw Error(ErrorCode::InvalidInput,
                  "element ids must be unique and cover 0.." + std::to_string(n - 1) +
                      ", offending id " + std::to_string(e.id));
    }
    seen[e.id] = 1;
    P.ranks_[e.id] = e.rank;
    any_label = any_label || !e.label.empty();
  }
  if (any_label) {
    P.labels_.assign(n, {});
    std::unordered_map<std::string, ElementId> by_label;
    for (auto& e : elements) {
      if (!e.label.empty() && !by_label.emplace(e.label, e.id).second) {
        throw Error(ErrorCode::InvalidInput, "duplicate label '" + e.label + "'");
      }
      P.labels_[e.id] = std::move(e.label);
    }
  }

  const Rank r = *std::max_element(P.ranks_.begin(), P.ranks_.end());
  P.levels_.assign(std::size_t{r} + 1, {});
  for (ElementId a = 0; a < n; ++a) P.levels_[P.ranks_[a]].push_back(a);
  for (Rank i = 0; i <= r; ++i) {
    if (P.levels_[i].empty()) {
      throw Error(ErrorCode::InvalidInput, "rank " + std::to_string(i) + " has no elements");
    }
  }

  for (const auto& c : covers) {
    if (c.lo >= n || c.hi >= n) {
      throw Error(ErrorCode::InvalidInput, "cover edge refers to an unknown element");
    }
    if (c.lo == c.hi) {
      throw Error(ErrorCode::CycleError, "element " + std::to_string(c.lo) + " covers itself");
    }
    if (P.ranks_[c.hi] != P.ranks_[c.lo] + 1) {
      if (P.ranks_[c.hi] < P.ranks_[c.lo]) {
        // A downward edge together with the rank function would close a cycle.
        throw Error(ErrorCode::CycleError, "cover " + std::to_string(c.lo) + " < " +
                                               std::to_string(c.hi) + " goes down in rank");
      }
      throw Error(ErrorCode::CoverRankError, "cover " + std::to_string(c.lo) + " < " +
                                                 std::to_string(c.hi) + " does not step up one rank");
    }
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  P.covers_ = std::move(covers);

  P.down_.assign(n, {});
  P.up_.assign(n, {});
  for (const auto& c : P.covers_) {
    P.up_[c.lo].push_back(c.hi);
    P.down_[c.hi].push_back(c.lo);
  }
  for (auto& v : P.down_) std::sort(v.begin(), v.end());

  P.graded_ = true;
  for (ElementId a = 0; a < n; ++a) {
    if ((P.ranks_[a] > 0 && P.down_[a].empty()) || (P.ranks_[a] < r && P.up_[a].empty())) {
      P.graded_ = false;
      break;
    }
  }
  P.cache_ = std::make_shared<RankedPoset::ClosureCache>();
  return P;
}

// ---------------------------------------------------------------- neighbourhoods

Family gamma_down(const RankedPoset& P, ElementId a) {
  P.require_member(a);
  auto lo = P.lower_covers(a);
  return Family(std::vector<ElementId>(lo.begin(), lo.end()));
}

Family gamma_up(const RankedPoset& P, ElementId a) {
  P.require_member(a);
  auto hi = P.upper_covers(a);
  return Family(std::vector<ElementId>(hi.begin(), hi.end()));
}

std::vector<char> upset_mask(const RankedPoset& P, const Family& A) {
  P.require_members(A);
  std::vector<char> in(P.size(), 0);
  for (ElementId a : A) in[a] = 1;
  for (Rank r = 0; r < P.max_rank(); ++r) {
    for (ElementId x : P.level(r)) {
      if (!in[x]) continue;
      for (ElementId y : P.upper_covers(x)) in[y] = 1;
    }
  }
  return in;
}

namespace {

std::vector<char> downset_mask(const RankedPoset& P, const Family& A) {
  P.require_members(A);
  std::vector<char> in(P.size(), 0);
  for (ElementId a : A) in[a] = 1;
  for (Rank r = P.max_rank(); r > 0; --r) {
    for (ElementId x : P.level(r)) {
      if (!in[x]) continue;
      for (ElementId y : P.lower_covers(x)) in[y] = 1;
    }
  }
  return in;
}

Family collect(const RankedPoset& P, const std::vector<char>& mask) {
  std::vector<ElementId> out;
  for (ElementId a = 0; a < P.size(); ++a) {
    if (mask[a]) out.push_back(a);
  }
  return Family(std::move(out));
}

Family collect_level(const RankedPoset& P, const std::vector<char>& mask, Rank i) {
  std::vector<ElementId> out;
  for (ElementId a : P.level(i)) {
    if (mask[a]) out.push_back(a);
  }
  return Family(std::move(out));
}

}  // namespace

Family gamma_up_set_to_level(const RankedPoset& P, const Family& A, long long i) {
  P.require_members(A);
  if (i < 0 || i > static_cast<long long>(P.max_rank())) return {};
  return collect_level(P, upset_mask(P, A), static_cast<Rank>(i));
}

Family gamma_down_set_to_level(const RankedPoset& P, const Family& A, long long i) {
  P.require_members(A);
  if (i < 0 || i > static_cast<long long>(P.max_rank())) return {};
  return collect_level(P, downset_mask(P, A), static_cast<Rank>(i));
}

Family upset(const RankedPoset& P, const Family& A) { return collect(P, upset_mask(P, A)); }

Family downset(const RankedPoset& P, const Family& A) { return collect(P, downset_mask(P, A)); }

// ---------------------------------------------------------------- chains

ChainCounts count_maximal_chains(const RankedPoset& P) {
  P.require_graded("count_maximal_chains");
  const std::size_t n = P.size();
  ChainCounts out;
  out.from_bottom.assign(n, 0);
  out.to_top.assign(n, 0);
  out.through.assign(n, 0);
  for (Rank r = 0; r <= P.max_rank(); ++r) {
    for (ElementId a : P.level(r)) {
      if (r == 0) {
        out.from_bottom[a] = 1;
        continue;
      }
      for (ElementId b : P.lower_covers(a)) out.from_bottom[a] += out.from_bottom[b];
    }
  }
  for (Rank r = P.max_rank() + 1; r-- > 0;) {
    for (ElementId a : P.level(r)) {
      if (r == P.max_rank()) {
        out.to_top[a] = 1;
        continue;
      }
      for (ElementId b : P.upper_covers(a)) out.to_top[a] += out.to_top[b];
    }
  }
  for (ElementId a = 0; a < n; ++a) out.through[a] = out.from_bottom[a] * out.to_top[a];
  for (ElementId a : P.level(0)) out.total += out.through[a];
  return out;
}

std::vector<std::vector<ElementId>> enumerate_maximal_chains(const RankedPoset& P, std::size_t cap) {
  const ChainCounts counts = count_maximal_chains(P);
  if (counts.total > cap) {
    throw Error(ErrorCode::ChainLimit, "'" + P.name() + "' has " + to_string(counts.total) +
                                           " maximal chains, cap is " + std::to_string(cap));
  }
  std::vector<std::vector<ElementId>> chains;
  chains.reserve(static_cast<std::size_t>(counts.total));
  std::vector<ElementId> path;
  path.reserve(P.num_levels());

  auto extend = [&](auto&& self, ElementId a) -> void {
    path.push_back(a);
    if (P.rank(a) == P.max_rank()) {
      chains.push_back(path);
    } else {
      for (ElementId b : P.upper_covers(a)) self(self, b);
    }
    path.pop_back();
  };
  for (ElementId a : P.level(0)) extend(extend, a);
  return chains;
}

std::map<ElementId, std::vector<ElementId>> boundary_edges(const RankedPoset& P, const Family& A) {
  const auto in = upset_mask(P, A);
  std::map<ElementId, std::vector<ElementId>> out;
  for (const auto& c : P.covers()) {
    if (in[c.hi] && !in[c.lo]) out[c.hi].push_back(c.lo);
  }
  return out;
}

RankedPoset adjoin_bounds(const RankedPoset& P) {
  const auto n = static_cast<ElementId>(P.size());
  const ElementId new_bottom = n;
  const ElementId new_top = n + 1;
  std::vector<ElementSpec> elements;
  elements.reserve(n + 2);
  const bool labelled = P.has_labels();
  for (ElementId a = 0; a < n; ++a) {
    elements.push_back({a, P.rank(a) + 1, labelled ? P.label(a) : std::string{}});
  }
  elements.push_back({new_bottom, 0, labelled ? "_bottom" : ""});
  elements.push_back({new_top, P.max_rank() + 2, labelled ? "_top" : ""});

  std::vector<CoverEdge> covers = P.covers();
  for (ElementId a : P.level(0)) covers.push_back({new_bottom, a});
  for (ElementId a : P.level(P.max_rank())) covers.push_back({a, new_top});
  return build_poset(P.name() + "*", std::move(elements), std::move(covers));
}

Family whole(const RankedPoset& P) {
  std::vector<ElementId> ids(P.size());
  std::iota(ids.begin(), ids.end(), ElementId{0});
  return Family(std::move(ids));
}

Family level_family(const RankedPoset& P, Rank i) {
  auto lv = P.level(i);
  return Family(std::vector<ElementId>(lv.begin(), lv.end()));
}

bool is_homogeneous(const RankedPoset& P, const Family& F) {
  P.require_members(F);
  std::vector<std::size_t> per_level(P.num_levels(), 0);
  for (ElementId a : F) ++per_level[P.rank(a)];
  for (Rank i = 0; i <= P.max_rank(); ++i) {
    if (per_level[i] != 0 && per_level[i] != P.whitney(i)) return false;
  }
  return true;
}

}  // namespace azposet
