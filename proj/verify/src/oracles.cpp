#include "azposet/verify/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>

namespace azposet::oracle {

std::vector<std::vector<ElementId>> maximal_chains(const RankedPoset& P) {
  std::vector<std::vector<ElementId>> out;
  std::vector<ElementId> path;
  const std::function<void(ElementId)> walk = [&](ElementId x) {
    path.push_back(x);
    if (P.upper_covers(x).empty()) {
      out.push_back(path);
    } else {
      for (ElementId y : P.upper_covers(x)) walk(y);
    }
    path.pop_back();
  };
  for (ElementId x : P.level(0)) walk(x);
  return out;
}

std::vector<Rational> chain_entry_ratios(const RankedPoset& P, const Family& A,
                                         const std::vector<std::vector<ElementId>>& chains) {
  std::vector<char> above(P.size(), 0);
  for (ElementId x = 0; x < P.size(); ++x) {
    for (ElementId a : A) {
      if (P.leq(a, x)) above[x] = 1;
    }
  }
  std::vector<std::uint64_t> entries(P.size(), 0);
  for (const auto& chain : chains) {
    for (ElementId x : chain) {
      if (above[x]) {
        ++entries[x];
        break;
      }
    }
  }
  std::vector<Rational> out(P.size());
  for (ElementId x = 0; x < P.size(); ++x) out[x] = Rational(entries[x], chains.size());
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt gaussian_binomial(unsigned n, unsigned k, unsigned q) {
  if (k > n) return 0;
  // table[m][j] = [m choose j]_q
  std::vector<std::vector<BigInt>> table(n + 1, std::vector<BigInt>(n + 1, 0));
  for (unsigned m = 0; m <= n; ++m) {
    table[m][0] = 1;
    for (unsigned j = 1; j <= m; ++j) {
      BigInt qj = 1;
      for (unsigned t = 0; t < j; ++t) qj *= q;
      table[m][j] = table[m - 1][j - 1] + qj * table[m - 1][j];
    }
  }
  return table[n][k];
}

std::uint64_t brute_W(const RankedPoset& P, const Family& A, ElementId x) {
  const auto below_x = [&](ElementId a) { return P.leq(a, x); };
  if (std::none_of(A.begin(), A.end(), below_x)) return 0;
  std::uint64_t W = 0;
  for (ElementId y : P.lower_covers(x)) {
    const bool reached = std::any_of(A.begin(), A.end(), [&](ElementId a) { return P.leq(a, y); });
    if (!reached) ++W;
  }
  return W;
}

Rational interval_beta(const RankedPoset& P, ElementId a, ElementId b) {
  Rational sum = 0;
  const Family A{a};
  for (ElementId x = 0; x < P.size(); ++x) {
    if (!P.leq(a, x) || !P.leq(x, b)) continue;
    const Rational N(P.whitney(P.rank(x)));
    if (x == a) {
      sum += 1 / N;
    } else {
      sum += Rational(brute_W(P, A, x)) / (Rational(P.lower_degree(x)) * N);
    }
  }
  return sum;
}

SubsetMaxima max_k_sperner_by_subsets(const RankedPoset& P, unsigned k) {
  const std::size_t n = P.size();
  if (n > 18) throw Error(ErrorCode::SizeLimit, "subset oracle handles at most 18 elements");
  std::vector<ElementId> order(n);
  for (ElementId i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) { return P.rank(a) < P.rank(b); });
  std::vector<std::uint32_t> below(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (P.less(order[i], order[j])) below[j] |= 1u << i;
    }
  }
  SubsetMaxima out;
  std::vector<std::uint32_t> best;
  std::vector<unsigned> height(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const std::size_t size = std::popcount(mask);
    if (size < out.size) continue;
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      if (!(mask >> j & 1u)) continue;
      unsigned h = 1;
      for (std::size_t i = 0; i < j; ++i) {
        if ((mask & below[j]) >> i & 1u) h = std::max(h, height[i] + 1);
      }
      height[j] = h;
      ok = h <= k;
    }
    if (!ok) continue;
    if (size > out.size) {
      out.size = size;
      best.clear();
    }
    best.push_back(mask);
  }
  for (std::uint32_t mask : best) {
    std::vector<ElementId> ids;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1u) ids.push_back(order[j]);
    }
    out.families.emplace_back(std::move(ids));
  }
  std::sort(out.families.begin(), out.families.end());
  return out;
}

ProductMaxima max_two_part_by_subsets(const RankedPoset& P, const RankedPoset& Q) {
  const std::size_t nq = Q.size();
  const std::size_t n = P.size() * nq;
  if (n > 20) throw Error(ErrorCode::SizeLimit, "subset oracle handles at most 20 pairs");
  std::vector<std::uint32_t> conflict(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (v == w) continue;
      const ElementId x = ElementId(v / nq), y = ElementId(v % nq);
      const ElementId u = ElementId(w / nq), z = ElementId(w % nq);
      const bool le = P.leq(x, u) && Q.leq(y, z);
      const bool ge = P.leq(u, x) && Q.leq(z, y);
      if ((le || ge) && (x == u || y == z)) conflict[v] |= 1u << w;
    }
  }
  ProductMaxima out;
  std::vector<std::uint32_t> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const std::size_t size = std::popcount(mask);
    if (size < out.size) continue;
    bool ok = true;
    for (std::uint32_t m = mask; m != 0 && ok; m &= m - 1) ok = (conflict[std::countr_zero(m)] & mask) == 0;
    if (!ok) continue;
    if (size > out.size) {
      out.size = size;
      best.clear();
    }
    best.push_back(mask);
  }
  for (std::uint32_t mask : best) {
    std::vector<ProductMember> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1u) members.emplace_back(ElementId(v / nq), ElementId(v % nq));
    }
    out.families.emplace_back(std::move(members));
  }
  std::sort(out.families.begin(), out.families.end());
  return out;
}

std::vector<BigInt> transversal_values(const RankedPoset& P, const RankedPoset& Q) {
  const bool p_short = P.num_levels() <= Q.num_levels();
  const auto a = (p_short ? P : Q).whitney_numbers();
  const auto b = (p_short ? Q : P).whitney_numbers();
  std::vector<BigInt> out;
  std::vector<char> used(b.size(), 0);
  const std::function<void(std::size_t, BigInt)> rec = [&](std::size_t i, BigInt value) {
    if (i == a.size()) {
      out.push_back(value);
      return;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      rec(i + 1, value + BigInt(a[i]) * b[j]);
      used[j] = 0;
    }
  };
  rec(0, 0);
  return out;
}

bool isomorphic(const RankedPoset& P, const RankedPoset& Q) {
  if (P.size() != Q.size() || P.whitney_numbers() != Q.whitney_numbers() ||
      P.covers().size() != Q.covers().size()) {
    return false;
  }
  std::vector<ElementId> order;
  for (Rank i = 0; i <= P.max_rank(); ++i) {
    for (ElementId a : P.level(i)) order.push_back(a);
  }
  std::vector<std::int64_t> image(P.size(), -1);
  std::vector<char> taken(Q.size(), 0);
  const std::function<bool(std::size_t)> extend = [&](std::size_t j) {
    if (j == order.size()) return true;
    const ElementId x = order[j];
    for (ElementId y : Q.level(P.rank(x))) {
      if (taken[y] || P.lower_degree(x) != Q.lower_degree(y) || P.upper_degree(x) != Q.upper_degree(y)) continue;
      std::set<ElementId> mapped;
      for (ElementId z : P.lower_covers(x)) mapped.insert(ElementId(image[z]));
      const std::set<ElementId> target(Q.lower_covers(y).begin(), Q.lower_covers(y).end());
      if (mapped != target) continue;
      image[x] = y;
      taken[y] = 1;
      if (extend(j + 1)) return true;
      image[x] = -1;
      taken[y] = 0;
    }
    return false;
  };
  return extend(0);
}

RankedPoset random_graded_poset(const std::vector<unsigned>& level_sizes, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::vector<ElementId>> levels;
  std::vector<ElementSpec> elements;
  ElementId next = 0;
  for (Rank i = 0; i < level_sizes.size(); ++i) {
    levels.emplace_back();
    for (unsigned j = 0; j < level_sizes[i]; ++j) {
      elements.push_back({next, i, ""});
      levels.back().push_back(next++);
    }
  }
  std::set<std::pair<ElementId, ElementId>> covers;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    const auto& lo = levels[i];
    const auto& hi = levels[i + 1];
    for (ElementId y : hi) covers.emplace(lo[rng() % lo.size()], y);
    for (ElementId x : lo) {
      const bool has_up = std::any_of(hi.begin(), hi.end(), [&](ElementId y) { return covers.count({x, y}) > 0; });
      if (!has_up) covers.emplace(x, hi[rng() % hi.size()]);
      for (ElementId y : hi) {
        if (coin(rng) < density) covers.emplace(x, y);
      }
    }
  }
  std::vector<CoverEdge> edges;
  for (const auto& [lo, hi] : covers) edges.push_back({lo, hi});
  return build_poset("random:" + std::to_string(seed), std::move(elements), std::move(edges));
}

RankedPoset non_normal_example() {
  std::vector<ElementSpec> elements{{0, 0, "u"}, {1, 0, "v"}, {2, 1, "x"}, {3, 1, "y"}, {4, 1, "z"}};
  std::vector<CoverEdge> covers{{0, 2}, {0, 3}, {0, 4}, {1, 2}};
  return build_poset("non_normal", std::move(elements), std::move(covers));
}

}  // namespace azposet::oracle
