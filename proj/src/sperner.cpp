#include "azposet/sperner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>

namespace azposet {

namespace {

// Hopcroft-Karp on a bipartite graph with `n` vertices on each side.
class BipartiteMatching {
 public:
  explicit BipartiteMatching(std::size_t n) : adj_(n), match_left_(n, kNone), match_right_(n, kNone), dist_(n) {}

  void add_edge(std::size_t u, std::size_t v) { adj_[u].push_back(v); }

  std::size_t run() {
    std::size_t size = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == kNone && dfs(u)) ++size;
      }
    }
    return size;
  }

  std::size_t left_partner(std::size_t u) const { return match_left_[u]; }
  std::size_t right_partner(std::size_t v) const { return match_right_[v]; }
  const std::vector<std::size_t>& neighbours(std::size_t u) const { return adj_[u]; }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

 private:
  bool bfs() {
    std::queue<std::size_t> queue;
    bool found = false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      dist_[u] = match_left_[u] == kNone ? 0 : kNone;
      if (dist_[u] == 0) queue.push(u);
    }
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t v : adj_[u]) {
        const std::size_t w = match_right_[v];
        if (w == kNone) {
          found = true;
        } else if (dist_[w] == kNone) {
          dist_[w] = dist_[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (std::size_t v : adj_[u]) {
      const std::size_t w = match_right_[v];
      if (w == kNone || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kNone;
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_, match_right_, dist_;
};

// Members of F sorted by rank, with the longest-chain height of each.
struct Heights {
  std::vector<ElementId> order;
  std::vector<std::size_t> height;
  std::vector<std::size_t> prev;  // predecessor on a longest chain, or npos
};

Heights chain_heights(const RankedPoset& P, const Family& F) {
  P.require_members(F);
  Heights h;
  h.order.assign(F.begin(), F.end());
  std::stable_sort(h.order.begin(), h.order.end(),
                   [&](ElementId a, ElementId b) { return P.rank(a) < P.rank(b); });
  const std::size_t n = h.order.size();
  h.height.assign(n, 1);
  h.prev.assign(n, std::string::npos);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (P.rank(h.order[i]) < P.rank(h.order[j]) && h.height[i] + 1 > h.height[j] &&
          P.less(h.order[i], h.order[j])) {
        h.height[j] = h.height[i] + 1;
        h.prev[j] = i;
      }
    }
  }
  return h;
}

struct ChainCover {
  std::vector<std::vector<ElementId>> chains;
};

// Minimum chain cover of `elems` (sorted by rank) under the strict order.
ChainCover min_chain_cover(const RankedPoset& P, const std::vector<ElementId>& elems) {
  const std::size_t n = elems.size();
  BipartiteMatching matching(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (P.rank(elems[i]) < P.rank(elems[j]) && P.less(elems[i], elems[j])) matching.add_edge(i, j);
    }
  }
  matching.run();
  ChainCover cover;
  for (std::size_t start = 0; start < n; ++start) {
    if (matching.right_partner(start) != BipartiteMatching::kNone) continue;
    std::vector<ElementId> chain;
    for (std::size_t u = start; u != BipartiteMatching::kNone; u = matching.left_partner(u)) {
      chain.push_back(elems[u]);
    }
    cover.chains.push_back(std::move(chain));
  }
  return cover;
}

std::vector<ElementId> rank_order(const RankedPoset& P) {
  std::vector<ElementId> order;
  order.reserve(P.size());
  for (Rank i = 0; i <= P.max_rank(); ++i) {
    for (ElementId a : P.level(i)) order.push_back(a);
  }
  return order;
}

// Branch and bound over subsets of at most kExhaustiveElementLimit elements,
// reporting every maximum k-Sperner family to `visit`.
class KSpernerSearch {
 public:
  KSpernerSearch(const RankedPoset& P, unsigned k) : P_(P), k_(k), order_(rank_order(P)) {
    const std::size_t n = order_.size();
    below_.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (P.less(order_[i], order_[j])) below_[j] |= 1u << i;
      }
    }
    bound_.assign(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const std::vector<ElementId> suffix(order_.begin() + j, order_.end());
      std::size_t b = 0;
      for (const auto& chain : min_chain_cover(P, suffix).chains) b += std::min<std::size_t>(chain.size(), k);
      bound_[j] = b;
    }
    for (Rank i = 0; i <= P.max_rank(); ++i) {
      std::uint32_t mask = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (P.rank(order_[j]) == i) mask |= 1u << j;
      }
      level_masks_.push_back(mask);
    }
    height_.assign(n, 0);
  }

  // visit(mask) is called for each family of the current best size; a
  // strictly larger family first triggers reset().
  void run(const std::function<void()>& reset, const std::function<void(std::uint32_t)>& visit) {
    reset_ = &reset;
    visit_ = &visit;
    best_ = 0;
    dfs(0, 0, 0);
  }

  std::size_t best() const { return best_; }

  bool homogeneous(std::uint32_t mask) const {
    return std::all_of(level_masks_.begin(), level_masks_.end(), [&](std::uint32_t lvl) {
      const std::uint32_t part = mask & lvl;
      return part == 0 || part == lvl;
    });
  }

  Family family(std::uint32_t mask) const {
    std::vector<ElementId> ids;
    for (std::size_t j = 0; j < order_.size(); ++j) {
      if (mask >> j & 1u) ids.push_back(order_[j]);
    }
    return Family(std::move(ids));
  }

 private:
  void dfs(std::size_t j, std::uint32_t mask, std::size_t count) {
    if (count + bound_[j] < best_) return;
    if (j == order_.size()) {
      if (count > best_) {
        best_ = count;
        (*reset_)();
      }
      (*visit_)(mask);
      return;
    }
    std::size_t h = 1;
    for (std::uint32_t m = mask & below_[j]; m != 0; m &= m - 1) {
      h = std::max(h, height_[std::countr_zero(m)] + 1);
    }
    if (h <= k_) {
      height_[j] = h;
      dfs(j + 1, mask | 1u << j, count + 1);
    }
    dfs(j + 1, mask, count);
  }

  const RankedPoset& P_;
  unsigned k_;
  std::vector<ElementId> order_;
  std::vector<std::uint32_t> below_;
  std::vector<std::size_t> bound_;
  std::vector<std::uint32_t> level_masks_;
  std::vector<std::size_t> height_;
  std::size_t best_ = 0;
  const std::function<void()>* reset_ = nullptr;
  const std::function<void(std::uint32_t)>* visit_ = nullptr;
};

void require_exhaustive_size(const RankedPoset& P, unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "k must be at least 1");
  if (P.size() > kExhaustiveElementLimit) {
    throw Error(ErrorCode::SizeLimit, "exhaustive k-Sperner search handles at most " +
                                          std::to_string(kExhaustiveElementLimit) + " elements, got " +
                                          std::to_string(P.size()));
  }
}

StrictSpernerReport strict_exhaustive(const RankedPoset& P, unsigned k) {
  require_exhaustive_size(P, k);
  KSpernerSearch search(P, k);
  StrictSpernerReport report;
  report.mode = StrictSpernerMode::Exhaustive;
  search.run(
      [&] {
        report.maxima = 0;
        report.non_homogeneous_maxima = 0;
        report.witness.reset();
      },
      [&](std::uint32_t mask) {
        ++report.maxima;
        if (!search.homogeneous(mask)) {
          ++report.non_homogeneous_maxima;
          if (!report.witness) report.witness = search.family(mask);
        }
      });
  report.maximum_size = search.best();
  report.holds = report.non_homogeneous_maxima == 0;
  return report;
}

// Every maximum antichain meets each chain of a minimum chain cover exactly
// once, so maxima are the pairwise incomparable transversals of the cover.
StrictSpernerReport strict_oracle(const RankedPoset& P) {
  if (P.size() > kMaxAntichainLimit) {
    throw Error(ErrorCode::SizeLimit, "antichain oracle handles at most " +
                                          std::to_string(kMaxAntichainLimit) + " elements");
  }
  auto chains = max_antichain(P).chain_cover;
  std::sort(chains.begin(), chains.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const std::size_t w = chains.size();
  StrictSpernerReport report;
  report.mode = StrictSpernerMode::Oracle;
  report.maximum_size = w;

  std::vector<ElementId> chosen;
  std::vector<std::vector<std::vector<ElementId>>> candidates(w + 1);
  candidates[0] = chains;
  const std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == w) {
      if (++report.maxima > kMaximaLimit) {
        throw Error(ErrorCode::SizeLimit, "more than " + std::to_string(kMaximaLimit) + " maximum antichains");
      }
      const Family F(chosen);
      if (!is_homogeneous(P, F)) {
        ++report.non_homogeneous_maxima;
        if (!report.witness) report.witness = F;
      }
      return;
    }
    for (ElementId x : candidates[depth][depth]) {
      auto& next = candidates[depth + 1];
      next.assign(w, {});
      bool alive = true;
      for (std::size_t j = depth + 1; j < w && alive; ++j) {
        for (ElementId y : candidates[depth][j]) {
          if (!P.comparable(x, y)) next[j].push_back(y);
        }
        alive = !next[j].empty();
      }
      if (!alive) continue;
      chosen.push_back(x);
      extend(depth + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  report.holds = report.non_homogeneous_maxima == 0;
  return report;
}

}  // namespace

KSpernerReport is_k_sperner(const RankedPoset& P, const Family& F, unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "k must be at least 1");
  const Heights h = chain_heights(P, F);
  KSpernerReport report;
  for (std::size_t j = 0; j < h.order.size(); ++j) {
    if (h.height[j] > k) {
      std::vector<ElementId> chain;
      for (std::size_t i = j; i != std::string::npos; i = h.prev[i]) chain.push_back(h.order[i]);
      std::reverse(chain.begin(), chain.end());
      chain.resize(k + 1);
      report.chain = std::move(chain);
      return report;
    }
  }
  report.holds = true;
  return report;
}

bool is_antichain(const RankedPoset& P, const Family& F) { return is_k_sperner(P, F, 1).holds; }

std::size_t longest_chain_length(const RankedPoset& P, const Family& F) {
  const Heights h = chain_heights(P, F);
  return h.height.empty() ? 0 : *std::max_element(h.height.begin(), h.height.end());
}

AntichainDecomposition dual_dilworth_decompose(const RankedPoset& P, const Family& F) {
  const Heights h = chain_heights(P, F);
  std::vector<std::vector<ElementId>> parts;
  for (std::size_t j = 0; j < h.order.size(); ++j) {
    if (parts.size() < h.height[j]) parts.resize(h.height[j]);
    parts[h.height[j] - 1].push_back(h.order[j]);
  }
  AntichainDecomposition out;
  for (auto& part : parts) out.parts.emplace_back(std::move(part));
  return out;
}

Rational lym_sum(const RankedPoset& P, const Family& F) {
  P.require_members(F);
  Rational sum = 0;
  for (ElementId a : F) sum += Rational(1, P.whitney(P.rank(a)));
  return sum;
}

MaxAntichainResult max_antichain(const RankedPoset& P) {
  const std::size_t n = P.size();
  if (n > kMaxAntichainLimit) {
    throw Error(ErrorCode::SizeLimit, "max_antichain handles at most " + std::to_string(kMaxAntichainLimit) +
                                          " elements, got " + std::to_string(n));
  }
  const std::vector<ElementId> order = rank_order(P);
  std::vector<std::size_t> pos(n);
  for (std::size_t j = 0; j < n; ++j) pos[order[j]] = j;

  BipartiteMatching matching(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (P.rank(order[i]) < P.rank(order[j]) && P.less(order[i], order[j])) matching.add_edge(i, j);
    }
  }
  matching.run();

  // Koenig: alternate from unmatched left vertices.
  std::vector<char> left_seen(n, 0), right_seen(n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t u = 0; u < n; ++u) {
    if (matching.left_partner(u) == BipartiteMatching::kNone) {
      left_seen[u] = 1;
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v : matching.neighbours(u)) {
      if (right_seen[v]) continue;
      right_seen[v] = 1;
      const std::size_t w = matching.right_partner(v);
      if (w != BipartiteMatching::kNone && !left_seen[w]) {
        left_seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<ElementId> antichain;
  for (std::size_t j = 0; j < n; ++j) {
    if (left_seen[j] && !right_seen[j]) antichain.push_back(order[j]);
  }

  MaxAntichainResult result;
  result.antichain = Family(std::move(antichain));
  for (std::size_t start = 0; start < n; ++start) {
    if (matching.right_partner(start) != BipartiteMatching::kNone) continue;
    std::vector<ElementId> chain;
    for (std::size_t u = start; u != BipartiteMatching::kNone; u = matching.left_partner(u)) {
      chain.push_back(order[u]);
    }
    result.chain_cover.push_back(std::move(chain));
  }
  return result;
}

StrictSpernerReport check_strict_k_sperner(const RankedPoset& P, unsigned k, StrictSpernerMode mode) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "k must be at least 1");
  if (mode == StrictSpernerMode::Auto) {
    if (P.size() <= kExhaustiveElementLimit) {
      mode = StrictSpernerMode::Exhaustive;
    } else if (k == 1) {
      mode = StrictSpernerMode::Oracle;
    } else {
      throw Error(ErrorCode::SizeLimit, "strict k-Sperner check for k > 1 handles at most " +
                                            std::to_string(kExhaustiveElementLimit) + " elements");
    }
  }
  if (mode == StrictSpernerMode::Oracle) {
    if (k != 1) throw Error(ErrorCode::InvalidInput, "oracle mode supports k = 1 only");
    return strict_oracle(P);
  }
  return strict_exhaustive(P, k);
}

std::vector<Family> maximum_k_sperner_families(const RankedPoset& P, unsigned k, std::size_t cap) {
  require_exhaustive_size(P, k);
  KSpernerSearch search(P, k);
  std::vector<std::uint32_t> masks;
  search.run([&] { masks.clear(); },
             [&](std::uint32_t mask) {
               if (masks.size() >= cap) {
                 throw Error(ErrorCode::SizeLimit, "more than " + std::to_string(cap) + " maximum families");
               }
               masks.push_back(mask);
             });
  std::vector<Family> out;
  out.reserve(masks.size());
  for (std::uint32_t mask : masks) out.push_back(search.family(mask));
  std::sort(out.begin(), out.end());
  return out;
}

StrictLymReport check_strict_lym(const RankedPoset& P, const Family& F, unsigned k) {
  const auto sperner = is_k_sperner(P, F, k);
  if (!sperner.holds) {
    throw Error(ErrorCode::NotKSperner, "family contains a chain of " + std::to_string(k + 1) + " elements");
  }
  StrictLymReport report;
  report.sum = lym_sum(P, F);
  const Rational target(k);
  if (report.sum < target) {
    report.verdict = LymVerdict::InequalityStrict;
  } else if (report.sum > target) {
    report.verdict = LymVerdict::BoundExceeded;
  } else {
    report.verdict = is_homogeneous(P, F) ? LymVerdict::Homogeneous : LymVerdict::Counterexample;
  }
  return report;
}

std::string_view to_string(StrictSpernerMode mode) {
  switch (mode) {
    case StrictSpernerMode::Auto: return "auto";
    case StrictSpernerMode::Exhaustive: return "exhaustive";
    case StrictSpernerMode::Oracle: return "oracle";
  }
  return "unknown";
}

std::string_view to_string(LymVerdict verdict) {
  switch (verdict) {
    case LymVerdict::InequalityStrict: return "inequality_strict";
    case LymVerdict::Homogeneous: return "homogeneous";
    case LymVerdict::Counterexample: return "counterexample";
    case LymVerdict::BoundExceeded: return "bound_exceeded";
  }
  return "unknown";
}

nlohmann::json certificate(const RankedPoset&, const StrictSpernerReport& report) {
  nlohmann::json j{{"property", "strict_sperner"},
                   {"holds", report.holds},
                   {"mode", to_string(report.mode)},
                   {"maximum_size", report.maximum_size},
                   {"maxima", report.maxima},
                   {"non_homogeneous_maxima", report.non_homogeneous_maxima},
                   {"witness", nullptr}};
  if (report.witness) j["witness"] = report.witness->ids();
  return j;
}

}  // namespace azposet
