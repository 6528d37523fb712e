#include "azposet/properties.hpp"

#include <algorithm>
#include <bit>

#include "azposet/maxflow.hpp"

namespace azposet {

namespace {

std::vector<std::uint32_t> positions_in_levels(const RankedPoset& P) {
  std::vector<std::uint32_t> pos(P.size(), 0);
  for (Rank i = 0; i <= P.max_rank(); ++i) {
    const auto lvl = P.level(i);
    for (std::uint32_t j = 0; j < lvl.size(); ++j) pos[lvl[j]] = j;
  }
  return pos;
}

void require_small_levels(const RankedPoset& P, std::string_view op) {
  for (Rank i = 0; i <= P.max_rank(); ++i) {
    if (P.whitney(i) > kEnumerationLevelLimit) {
      throw Error(ErrorCode::LevelTooLarge,
                  std::string(op) + ": level " + std::to_string(i) + " has " +
                      std::to_string(P.whitney(i)) + " elements, enumeration limit is " +
                      std::to_string(kEnumerationLevelLimit));
    }
  }
}

Family family_from_mask(std::span<const ElementId> lvl, std::uint32_t mask) {
  std::vector<ElementId> ids;
  for (std::uint32_t j = 0; j < lvl.size(); ++j) {
    if (mask >> j & 1u) ids.push_back(lvl[j]);
  }
  return Family(std::move(ids));
}

// Scans every nonempty subset A of level i (proper only when `strict`) and
// returns the first mask with |A| N_{i-1} > |shadow| N_i, or >= when strict.
std::optional<std::uint32_t> scan_level(const RankedPoset& P, Rank i, bool strict,
                                        const std::vector<std::uint32_t>& pos) {
  const auto lvl = P.level(i);
  const std::uint64_t n_hi = P.whitney(i);
  const std::uint64_t n_lo = P.whitney(i - 1);
  std::vector<std::uint32_t> cover_mask(lvl.size(), 0);
  for (std::size_t j = 0; j < lvl.size(); ++j) {
    for (ElementId y : P.lower_covers(lvl[j])) cover_mask[j] |= 1u << pos[y];
  }
  const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << lvl.size()) - 1);
  std::vector<std::uint32_t> shadow(std::size_t{1} << lvl.size(), 0);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const int low = std::countr_zero(mask);
    shadow[mask] = shadow[mask & (mask - 1)] | cover_mask[low];
    if (strict && mask == full) break;
    const std::uint64_t lhs = std::uint64_t(std::popcount(mask)) * n_lo;
    const std::uint64_t rhs = std::uint64_t(std::popcount(shadow[mask])) * n_hi;
    if (strict ? lhs >= rhs : lhs > rhs) return mask;
  }
  return std::nullopt;
}

// Max flow between levels i-1 and i; returns the violating set on failure.
std::optional<Family> flow_level(const RankedPoset& P, Rank i,
                                 const std::vector<std::uint32_t>& pos) {
  const auto hi = P.level(i);
  const auto lo = P.level(i - 1);
  const std::size_t source = hi.size() + lo.size();
  const std::size_t sink = source + 1;
  MaxFlow net(sink + 1);
  const auto n_hi = static_cast<MaxFlow::Capacity>(hi.size());
  const auto n_lo = static_cast<MaxFlow::Capacity>(lo.size());
  for (std::size_t j = 0; j < hi.size(); ++j) {
    net.add_edge(source, j, n_lo);
    for (ElementId y : P.lower_covers(hi[j])) net.add_edge(j, hi.size() + pos[y], MaxFlow::kInfinite);
  }
  for (std::size_t j = 0; j < lo.size(); ++j) net.add_edge(hi.size() + j, sink, n_hi);
  if (net.run(source, sink) == n_hi * n_lo) return std::nullopt;
  const auto side = net.source_side();
  std::vector<ElementId> witness;
  for (std::size_t j = 0; j < hi.size(); ++j) {
    if (side[j]) witness.push_back(hi[j]);
  }
  return Family(std::move(witness));
}

nlohmann::json ids_json(const Family& F) { return nlohmann::json(F.ids()); }

}  // namespace

// ---------------------------------------------------------------- regularity

RegularityReport check_regular(const RankedPoset& P) {
  RegularityReport report;
  DegreeProfile profile;
  profile.lower.assign(P.num_levels(), 0);
  profile.upper.assign(P.num_levels(), 0);
  for (bool lower : {true, false}) {
    for (Rank i = 0; i <= P.max_rank(); ++i) {
      const auto lvl = P.level(i);
      const auto degree = [&](ElementId a) { return lower ? P.lower_degree(a) : P.upper_degree(a); };
      const std::size_t d0 = degree(lvl.front());
      for (ElementId a : lvl) {
        if (degree(a) != d0) {
          report.violation = DegreeViolation{i, lower, lvl.front(), a, d0, degree(a)};
          return report;
        }
      }
      (lower ? profile.lower : profile.upper)[i] = d0;
    }
  }
  report.holds = true;
  report.profile = std::move(profile);
  return report;
}

bool check_level_size_identity(const RankedPoset& P, const DegreeProfile& profile) {
  BigInt down = 1;
  BigInt up = 1;
  for (Rank k = 1; k <= P.max_rank(); ++k) {
    down *= profile.lower.at(k);
    up *= profile.upper.at(k - 1);
    if (BigInt(P.whitney(k)) * down != BigInt(P.whitney(0)) * up) return false;
  }
  return true;
}

// ---------------------------------------------------------------- normality

NormalityReport check_normal(const RankedPoset& P, NormalityMode mode) {
  P.require_graded("check_normal");
  if (mode == NormalityMode::Enumerate) require_small_levels(P, "check_normal");
  const auto pos = positions_in_levels(P);
  NormalityReport report;
  report.holds = true;
  report.level_holds.assign(P.num_levels(), true);
  for (Rank i = 1; i <= P.max_rank(); ++i) {
    std::optional<Family> witness;
    if (mode == NormalityMode::Enumerate) {
      if (auto mask = scan_level(P, i, false, pos)) witness = family_from_mask(P.level(i), *mask);
    } else {
      witness = flow_level(P, i, pos);
    }
    if (witness) {
      report.level_holds[i] = false;
      if (report.holds) {
        report.holds = false;
        report.witness_level = i;
        report.witness = std::move(*witness);
      }
    }
  }
  return report;
}

StrictNormalityReport check_strictly_normal(const RankedPoset& P) {
  P.require_graded("check_strictly_normal");
  StrictNormalityReport report;
  if (check_regular(P).holds && check_level_connected(P).holds) {
    report.holds = true;
    report.path = StrictNormalityPath::RegularAndLevelConnected;
    return report;
  }
  require_small_levels(P, "check_strictly_normal");
  const auto pos = positions_in_levels(P);
  report.path = StrictNormalityPath::Enumeration;
  for (Rank i = 1; i <= P.max_rank(); ++i) {
    if (auto mask = scan_level(P, i, true, pos)) {
      report.witness_level = i;
      report.witness = family_from_mask(P.level(i), *mask);
      return report;
    }
  }
  report.holds = true;
  return report;
}

LevelConnectivityReport check_level_connected(const RankedPoset& P) {
  P.require_graded("check_level_connected");
  std::vector<ElementId> parent(P.size());
  const auto find = [&](ElementId a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  LevelConnectivityReport report;
  for (Rank i = 0; i < P.max_rank(); ++i) {
    for (Rank j : {i, i + 1}) {
      for (ElementId a : P.level(j)) parent[a] = a;
    }
    std::size_t components = P.whitney(i) + P.whitney(i + 1);
    for (ElementId x : P.level(i)) {
      for (ElementId y : P.upper_covers(x)) {
        const ElementId a = find(x), b = find(y);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
    }
    if (components != 1) {
      report.first_disconnected = i;
      return report;
    }
  }
  report.holds = true;
  return report;
}

// ---------------------------------------------------------------- strong regularity

LambdaTable::LambdaTable(Rank max_rank)
    : max_rank_(max_rank),
      data_(std::size_t(max_rank + 1) * (max_rank + 1) * (max_rank + 1), 0) {}

std::size_t LambdaTable::slot(Rank i, Rank k, Rank l) const {
  const std::size_t n = max_rank_ + 1;
  return (std::size_t(i) * n + k) * n + l;
}

std::uint64_t LambdaTable::operator()(long long i, long long k, long long l) const {
  if (data_.empty() || k < 0 || k > i || i > l || l > static_cast<long long>(max_rank_)) return 0;
  return data_[slot(Rank(i), Rank(k), Rank(l))];
}

void LambdaTable::set(Rank i, Rank k, Rank l, std::uint64_t value) {
  if (!(k <= i && i <= l && l <= max_rank_)) {
    throw Error(ErrorCode::RankOutOfRange, "lambda entry outside k <= i <= l <= r");
  }
  data_[slot(i, k, l)] = value;
}

StrongRegularityReport check_strongly_regular(const RankedPoset& P) {
  P.require_u_poset("check_strongly_regular");
  const Rank r = P.max_rank();
  LambdaTable table(r);
  // First comparable pair seen for each (k, l), with its per-rank counts.
  std::vector<std::optional<std::pair<ElementId, ElementId>>> seen(std::size_t(r + 1) * (r + 1));
  StrongRegularityReport report;
  std::vector<std::uint64_t> counts(r + 1);
  for (ElementId a = 0; a < P.size(); ++a) {
    const Family above = upset(P, Family{a});
    for (ElementId b : above) {
      const Rank k = P.rank(a), l = P.rank(b);
      std::fill(counts.begin(), counts.end(), 0);
      for (ElementId x : above) {
        if (P.rank(x) <= l && P.leq(x, b)) ++counts[P.rank(x)];
      }
      auto& first = seen[std::size_t(k) * (r + 1) + l];
      if (!first) {
        first = std::make_pair(a, b);
        for (Rank i = k; i <= l; ++i) table.set(i, k, l, counts[i]);
        continue;
      }
      for (Rank i = k; i <= l; ++i) {
        if (counts[i] != table(i, k, l)) {
          report.violation = StrongRegularityViolation{i, k, l, *first, {a, b}, table(i, k, l), counts[i]};
          return report;
        }
      }
    }
  }
  report.holds = true;
  report.table = std::move(table);
  return report;
}

// ---------------------------------------------------------------- chain coverings

const Rational& ChainCovering::weight(const RankedPoset& P, ElementId lo, ElementId hi) const {
  const auto idx = P.cover_index(lo, hi);
  if (!idx) {
    throw Error(ErrorCode::InvalidInput,
                "(" + std::to_string(lo) + ", " + std::to_string(hi) + ") is not a cover edge");
  }
  return weights_.at(*idx);
}

Rational ChainCovering::chain_weight(const RankedPoset& P, std::span<const ElementId> chain) const {
  if (chain.empty()) return Rational(0);
  Rational f(1, P.whitney(P.rank(chain.front())));
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    f *= weight(P, chain[j], chain[j + 1]) * P.whitney(P.rank(chain[j]));
  }
  return f;
}

ChainCovering build_chain_covering(const RankedPoset& P) {
  P.require_graded("build_chain_covering");
  const auto pos = positions_in_levels(P);
  std::vector<Rational> weights(P.covers().size());
  for (Rank i = 0; i < P.max_rank(); ++i) {
    const auto lo = P.level(i);
    const auto hi = P.level(i + 1);
    const std::size_t source = lo.size() + hi.size();
    const std::size_t sink = source + 1;
    const auto n_lo = static_cast<MaxFlow::Capacity>(lo.size());
    const auto n_hi = static_cast<MaxFlow::Capacity>(hi.size());
    MaxFlow net(sink + 1);
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (cover index, flow handle)
    for (std::size_t j = 0; j < lo.size(); ++j) {
      net.add_edge(source, j, n_hi);
      for (ElementId y : P.upper_covers(lo[j])) {
        const std::size_t h = net.add_edge(j, lo.size() + pos[y], MaxFlow::kInfinite);
        edges.emplace_back(*P.cover_index(lo[j], y), h);
      }
    }
    for (std::size_t j = 0; j < hi.size(); ++j) net.add_edge(lo.size() + j, sink, n_lo);
    if (net.run(source, sink) != n_lo * n_hi) {
      throw Error(ErrorCode::NotNormal, "no regular covering between levels " + std::to_string(i) +
                                            " and " + std::to_string(i + 1) + " of '" + P.name() + "'");
    }
    for (const auto& [cover, handle] : edges) {
      weights[cover] = Rational(net.flow_on(handle), n_lo * n_hi);
    }
  }
  return ChainCovering(std::move(weights));
}

CoveringVerification verify_chain_covering(const RankedPoset& P, const ChainCovering& cov,
                                           std::size_t chain_cap) {
  P.require_graded("verify_chain_covering");
  CoveringVerification out;
  const auto& g = cov.weights();
  if (g.size() != P.covers().size()) {
    throw Error(ErrorCode::InvalidInput, "covering has " + std::to_string(g.size()) +
                                             " weights for " + std::to_string(P.covers().size()) +
                                             " cover edges");
  }
  const auto flag = [&](ElementId a) {
    if (!out.violated_element) out.violated_element = a;
  };

  out.marginals_hold = true;
  std::vector<Rational> row(P.size()), col(P.size());
  for (std::size_t e = 0; e < g.size(); ++e) {
    const auto [lo, hi] = P.covers()[e];
    if (g[e] < 0) {
      out.marginals_hold = false;
      flag(lo);
    }
    row[lo] += g[e];
    col[hi] += g[e];
  }
  for (ElementId a = 0; a < P.size(); ++a) {
    const Rational expect(1, P.whitney(P.rank(a)));
    if ((P.rank(a) < P.max_rank() && row[a] != expect) || (P.rank(a) > 0 && col[a] != expect)) {
      out.marginals_hold = false;
      flag(a);
    }
  }

  const auto chains = enumerate_maximal_chains(P, chain_cap);
  std::vector<Rational> through(P.size());
  for (const auto& chain : chains) {
    const Rational f = cov.chain_weight(P, chain);
    out.total_mass += f;
    for (ElementId a : chain) through[a] += f;
  }
  out.chains_hold = out.total_mass == 1;
  for (ElementId a = 0; a < P.size(); ++a) {
    if (through[a] != Rational(1, P.whitney(P.rank(a)))) {
      out.chains_hold = false;
      flag(a);
    }
  }
  out.holds = out.marginals_hold && out.chains_hold;
  return out;
}

// ---------------------------------------------------------------- certificates

nlohmann::json certificate(const RankedPoset&, const RegularityReport& report) {
  nlohmann::json j{{"property", "regular"}, {"holds", report.holds}, {"witness", nullptr}};
  if (report.profile) {
    j["profile"] = {{"d_minus", report.profile->lower}, {"d_plus", report.profile->upper}};
  }
  if (const auto& v = report.violation) {
    j["witness"] = {v->first, v->second};
    j["violation"] = {{"rank", v->rank},
                      {"degree", v->lower ? "lower" : "upper"},
                      {"degrees", {v->first_degree, v->second_degree}}};
  }
  return j;
}

nlohmann::json certificate(const RankedPoset&, const NormalityReport& report) {
  nlohmann::json j{{"property", "normal"}, {"holds", report.holds}, {"witness", nullptr}};
  j["level_holds"] = report.level_holds;
  if (report.witness_level) {
    j["witness"] = ids_json(report.witness);
    j["witness_level"] = *report.witness_level;
  }
  return j;
}

nlohmann::json certificate(const RankedPoset&, const StrictNormalityReport& report) {
  nlohmann::json j{{"property", "strictly_normal"}, {"holds", report.holds}, {"witness", nullptr}};
  j["path"] = report.path == StrictNormalityPath::RegularAndLevelConnected ? "regular_level_connected"
                                                                            : "enumeration";
  if (report.witness_level) {
    j["witness"] = ids_json(report.witness);
    j["witness_level"] = *report.witness_level;
  }
  return j;
}

nlohmann::json certificate(const RankedPoset&, const LevelConnectivityReport& report) {
  nlohmann::json j{{"property", "level_connected"}, {"holds", report.holds}, {"witness", nullptr}};
  if (report.first_disconnected) j["first_disconnected"] = *report.first_disconnected;
  return j;
}

nlohmann::json certificate(const RankedPoset& P, const StrongRegularityReport& report) {
  nlohmann::json j{{"property", "strongly_regular"}, {"holds", report.holds}, {"witness", nullptr}};
  if (report.table) {
    nlohmann::json rows = nlohmann::json::array();
    const Rank r = P.max_rank();
    for (Rank k = 0; k <= r; ++k) {
      for (Rank l = k; l <= r; ++l) {
        for (Rank i = k; i <= l; ++i) rows.push_back({i, k, l, (*report.table)(i, k, l)});
      }
    }
    j["lambda_table"] = std::move(rows);
  }
  if (const auto& v = report.violation) {
    j["witness"] = {v->first_pair.first, v->first_pair.second, v->second_pair.first, v->second_pair.second};
    j["violation"] = {{"i", v->i}, {"k", v->k}, {"l", v->l}, {"counts", {v->first_count, v->second_count}}};
  }
  return j;
}

}  // namespace azposet
