#include "azposet/twopart.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "azposet/az.hpp"
#include "azposet/properties.hpp"
#include "azposet/sperner.hpp"

namespace azposet {

// ---------------------------------------------------------------- ProductFamily

ProductFamily::ProductFamily(std::initializer_list<ProductMember> members)
    : ProductFamily(std::vector<ProductMember>(members)) {}

ProductFamily::ProductFamily(std::vector<ProductMember> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ProductFamily::contains(ProductMember m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

Family ProductFamily::slice_at_q(ElementId q) const {
  std::vector<ElementId> ids;
  for (const auto& [a, b] : members_) {
    if (b == q) ids.push_back(a);
  }
  return Family(std::move(ids));
}

Family ProductFamily::slice_at_p(ElementId p) const {
  std::vector<ElementId> ids;
  for (const auto& [a, b] : members_) {
    if (a == p) ids.push_back(b);
  }
  return Family(std::move(ids));
}

ProductFamily ProductFamily::swapped() const {
  std::vector<ProductMember> out;
  out.reserve(members_.size());
  for (const auto& [a, b] : members_) out.emplace_back(b, a);
  return ProductFamily(std::move(out));
}

void require_members(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& F) {
  for (const auto& [a, b] : F) {
    P.require_member(a);
    Q.require_member(b);
  }
}

// ---------------------------------------------------------------- recognition

TwoPartReport is_two_part_sperner(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& F) {
  require_members(P, Q, F);
  TwoPartReport report;
  const auto& m = F.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j) continue;
      const auto [x, y] = m[i];
      const auto [u, v] = m[j];
      if ((x == u || y == v) && P.leq(x, u) && Q.leq(y, v)) {
        report.violation = std::make_pair(m[i], m[j]);
        return report;
      }
    }
  }
  report.holds = true;
  return report;
}

bool is_two_part_sperner_by_slices(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& F) {
  require_members(P, Q, F);
  std::set<ElementId> ps, qs;
  for (const auto& [a, b] : F) {
    ps.insert(a);
    qs.insert(b);
  }
  for (ElementId b : qs) {
    if (!is_antichain(P, F.slice_at_q(b))) return false;
  }
  for (ElementId a : ps) {
    if (!is_antichain(Q, F.slice_at_p(a))) return false;
  }
  return true;
}

// ---------------------------------------------------------------- identities

TwoPartAZ two_part_az_sum(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& A) {
  P.require_u_poset("two_part_az_sum");
  Q.require_graded("two_part_az_sum");
  require_members(P, Q, A);
  TwoPartAZ out;
  out.per_q.resize(Q.size());
  for (ElementId y = 0; y < Q.size(); ++y) {
    const Family slice = A.slice_at_q(y);
    if (slice.empty()) {
      throw Error(ErrorCode::EmptySlice, "slice A(" + Q.label(y) + ") is empty");
    }
    out.per_q[y] = az_identity_sum(P, slice).total / Q.whitney(Q.rank(y));
    out.total += out.per_q[y];
  }
  return out;
}

TwoPartIdentity two_part_sperner_identity(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& A) {
  if (Q.max_rank() > P.max_rank()) {
    TwoPartIdentity out = two_part_sperner_identity(Q, P, A.swapped());
    out.swapped = true;
    return out;
  }
  const auto sperner = is_two_part_sperner(P, Q, A);
  if (!sperner.holds) throw Error(ErrorCode::NotTwoPartSperner, "family is not a 2-part Sperner system");
  P.require_u_poset("two_part_sperner_identity");
  Q.require_graded("two_part_sperner_identity");
  TwoPartIdentity out;
  out.expected = Q.max_rank() + 1;
  for (ElementId y = 0; y < Q.size(); ++y) {
    const Family slice = A.slice_at_q(y);
    if (slice.empty()) throw Error(ErrorCode::EmptySlice, "slice A(" + Q.label(y) + ") is empty");
    const Rational m(1, Q.whitney(Q.rank(y)));
    const AZBreakdown b = az_identity_sum(P, slice);
    for (const AZTerm& t : b.terms) {
      if (t.in_A) {
        out.lym_part += m * Rational(1, P.whitney(P.rank(t.x)));
      } else {
        out.remainder += m * t.term;
      }
    }
  }
  out.total = out.lym_part + out.remainder;
  return out;
}

// ---------------------------------------------------------------- transversals

namespace {

BigInt sorted_pairing(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  BigInt total = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) total += BigInt(a[i]) * b[i];
  return total;
}

}  // namespace

BigInt well_paired_size(const RankedPoset& P, const RankedPoset& Q) {
  return sorted_pairing(P.whitney_numbers(), Q.whitney_numbers());
}

TransversalResult best_full_transversal(const RankedPoset& P, const RankedPoset& Q) {
  const bool p_short = P.max_rank() <= Q.max_rank();
  const auto a = (p_short ? P : Q).whitney_numbers();
  const auto b = (p_short ? Q : P).whitney_numbers();
  const std::size_t t = a.size();
  const std::size_t m = b.size();

  std::vector<std::size_t> best_assign;
  BigInt best = -1;
  if (m <= 8) {
    std::vector<std::size_t> assign;
    std::vector<char> used(m, 0);
    const std::function<void(BigInt)> rec = [&](BigInt value) {
      if (assign.size() == t) {
        if (value > best) {
          best = value;
          best_assign = assign;
        }
        return;
      }
      const std::size_t i = assign.size();
      for (std::size_t j = 0; j < m; ++j) {
        if (used[j]) continue;
        used[j] = 1;
        assign.push_back(j);
        rec(value + BigInt(a[i]) * b[j]);
        assign.pop_back();
        used[j] = 0;
      }
    };
    rec(0);
  } else {
    const BigInt target = sorted_pairing(a, b);
    std::vector<char> used(m, 0);
    BigInt prefix = 0;
    for (std::size_t i = 0; i < t; ++i) {
      const std::vector<std::uint64_t> rest_a(a.begin() + i + 1, a.end());
      for (std::size_t j = 0; j < m; ++j) {
        if (used[j]) continue;
        std::vector<std::uint64_t> rest_b;
        for (std::size_t jj = 0; jj < m; ++jj) {
          if (!used[jj] && jj != j) rest_b.push_back(b[jj]);
        }
        const BigInt value = prefix + BigInt(a[i]) * b[j];
        if (value + sorted_pairing(rest_a, rest_b) == target) {
          used[j] = 1;
          prefix = value;
          best_assign.push_back(j);
          break;
        }
      }
    }
    best = prefix;
  }

  TransversalResult out;
  out.size = best;
  for (std::size_t i = 0; i < t; ++i) {
    const Rank s = static_cast<Rank>(i), l = static_cast<Rank>(best_assign[i]);
    out.transversal.pairs.emplace_back(p_short ? s : l, p_short ? l : s);
  }
  out.transversal.full = true;
  return out;
}

ProductFamily homogeneous_family(const RankedPoset& P, const RankedPoset& Q, const Transversal& T) {
  std::vector<ProductMember> members;
  for (const auto& [i, j] : T.pairs) {
    for (ElementId a : P.level(i)) {
      for (ElementId b : Q.level(j)) members.emplace_back(a, b);
    }
  }
  return ProductFamily(std::move(members));
}

ProductFamily well_paired_family(const RankedPoset& P, const RankedPoset& Q) {
  return homogeneous_family(P, Q, best_full_transversal(P, Q).transversal);
}

std::optional<Transversal> homogeneous_blocks(const RankedPoset& P, const RankedPoset& Q,
                                              const ProductFamily& F) {
  require_members(P, Q, F);
  std::map<std::pair<Rank, Rank>, std::uint64_t> blocks;
  for (const auto& [a, b] : F) ++blocks[{P.rank(a), Q.rank(b)}];
  Transversal T;
  std::set<Rank> is, js;
  bool distinct = true;
  for (const auto& [key, count] : blocks) {
    if (count != P.whitney(key.first) * Q.whitney(key.second)) return std::nullopt;
    T.pairs.push_back(key);
    distinct = is.insert(key.first).second && distinct;
    distinct = js.insert(key.second).second && distinct;
  }
  T.full = distinct && T.pairs.size() == std::min(P.max_rank(), Q.max_rank()) + std::size_t{1};
  return T;
}

bool is_well_paired(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& F) {
  const auto T = homogeneous_blocks(P, Q, F);
  return T && T->full && BigInt(F.size()) == well_paired_size(P, Q);
}

// ---------------------------------------------------------------- exact maximum

namespace {

class ConflictMIS {
 public:
  ConflictMIS(const RankedPoset& P, const RankedPoset& Q) : nq_(Q.size()) {
    const std::size_t n = P.size() * Q.size();
    adj_.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      const ElementId x = ElementId(v / nq_), y = ElementId(v % nq_);
      for (std::size_t w = 0; w < n; ++w) {
        if (v == w) continue;
        const ElementId u = ElementId(w / nq_), z = ElementId(w % nq_);
        const bool conflict = (x == u && Q.comparable(y, z)) || (y == z && P.comparable(x, u));
        if (conflict) adj_[v] |= std::uint64_t{1} << w;
      }
    }
    all_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  void run(bool enumerate_all, std::size_t cap) {
    enumerate_all_ = enumerate_all;
    cap_ = cap;
    best_ = 0;
    found_.clear();
    search(all_, 0, 0);
  }

  std::size_t best() const { return best_; }
  const std::vector<std::uint64_t>& found() const { return found_; }

  ProductFamily family(std::uint64_t mask) const {
    std::vector<ProductMember> members;
    for (; mask != 0; mask &= mask - 1) {
      const std::size_t v = std::countr_zero(mask);
      members.emplace_back(ElementId(v / nq_), ElementId(v % nq_));
    }
    return ProductFamily(std::move(members));
  }

 private:
  std::size_t clique_cover(std::uint64_t rest) const {
    std::size_t cliques = 0;
    while (rest != 0) {
      std::uint64_t grow = rest;
      std::uint64_t clique = 0;
      while (grow != 0) {
        const std::size_t v = std::countr_zero(grow);
        clique |= std::uint64_t{1} << v;
        grow &= adj_[v];
      }
      rest &= ~clique;
      ++cliques;
    }
    return cliques;
  }

  void search(std::uint64_t cand, std::uint64_t chosen, std::size_t count) {
    const std::size_t bound = count + clique_cover(cand);
    if (enumerate_all_ ? bound < best_ : bound <= best_ && !found_.empty()) return;
    if (cand == 0) {
      if (count > best_ || found_.empty()) {
        best_ = count;
        found_.clear();
      }
      if (found_.size() >= cap_) {
        throw Error(ErrorCode::SizeLimit, "more than " + std::to_string(cap_) + " maximum families");
      }
      found_.push_back(chosen);
      return;
    }
    // Branch on the candidate with the most conflicts inside cand.
    std::size_t v = std::countr_zero(cand);
    int most = -1;
    for (std::uint64_t m = cand; m != 0; m &= m - 1) {
      const std::size_t u = std::countr_zero(m);
      const int deg = std::popcount(adj_[u] & cand);
      if (deg > most) {
        most = deg;
        v = u;
      }
    }
    const std::uint64_t bit = std::uint64_t{1} << v;
    search(cand & ~adj_[v] & ~bit, chosen | bit, count + 1);
    if (most > 0) search(cand & ~bit, chosen, count);
  }

  std::size_t nq_;
  std::vector<std::uint64_t> adj_;
  std::uint64_t all_ = 0;
  bool enumerate_all_ = false;
  std::size_t cap_ = 0;
  std::size_t best_ = 0;
  std::vector<std::uint64_t> found_;
};

}  // namespace

TwoPartMaximum max_two_part_sperner_exact(const RankedPoset& P, const RankedPoset& Q, bool enumerate_all) {
  const std::size_t n = P.size() * Q.size();
  const std::size_t limit = enumerate_all ? kMaxProductAll : kMaxProductSingle;
  if (n > limit) {
    throw Error(ErrorCode::SizeLimit, "exact 2-part search handles at most " + std::to_string(limit) +
                                          " pairs, got " + std::to_string(n));
  }
  ConflictMIS mis(P, Q);
  mis.run(enumerate_all, enumerate_all ? kMaximaLimit : 1);
  TwoPartMaximum out;
  out.size = mis.best();
  for (std::uint64_t mask : mis.found()) out.families.push_back(mis.family(mask));
  std::sort(out.families.begin(), out.families.end());
  return out;
}

StrictTwoPartReport verify_strict_two_part(const RankedPoset& P, const RankedPoset& Q,
                                           bool require_strictly_normal) {
  if (require_strictly_normal) {
    for (const RankedPoset* X : {&P, &Q}) {
      if (!check_strictly_normal(*X).holds) {
        throw Error(ErrorCode::NotStrictlyNormal, "'" + X->name() + "' is not strictly normal");
      }
    }
  }
  const TwoPartMaximum maximum = max_two_part_sperner_exact(P, Q, true);
  StrictTwoPartReport report;
  report.maximum_size = maximum.size;
  report.well_paired_size = well_paired_size(P, Q);
  report.maxima = maximum.families.size();
  for (const ProductFamily& F : maximum.families) {
    if (!is_well_paired(P, Q, F)) {
      ++report.non_homogeneous_maxima;
      if (!report.witness) report.witness = F;
    }
  }
  report.families = maximum.families;
  report.holds = report.non_homogeneous_maxima == 0 && BigInt(report.maximum_size) == report.well_paired_size;
  return report;
}

// ---------------------------------------------------------------- chain bounds

void require_maximal_chain(const RankedPoset& P, std::span<const ElementId> chain) {
  const auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::NotMaximalChain, "not a maximal chain of '" + P.name() + "': " + why);
  };
  if (chain.size() != P.num_levels()) fail("expected " + std::to_string(P.num_levels()) + " elements");
  for (ElementId a : chain) {
    if (!P.contains(a)) fail("unknown element " + std::to_string(a));
  }
  if (P.rank(chain.front()) != 0) fail("does not start at rank 0");
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    if (!P.cover_index(chain[j], chain[j + 1])) {
      fail(std::to_string(chain[j]) + " is not covered by " + std::to_string(chain[j + 1]));
    }
  }
}

ChainPairBound chain_pair_bound(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& F,
                                std::span<const ElementId> C1, std::span<const ElementId> C2) {
  require_maximal_chain(P, C1);
  require_maximal_chain(Q, C2);
  if (!is_two_part_sperner(P, Q, F).holds) {
    throw Error(ErrorCode::NotTwoPartSperner, "family is not a 2-part Sperner system");
  }
  ChainPairBound out;
  out.bound = std::min(P.max_rank(), Q.max_rank()) + std::size_t{1};
  const std::set<ElementId> s1(C1.begin(), C1.end()), s2(C2.begin(), C2.end());
  for (const auto& [a, b] : F) {
    if (s1.count(a) && s2.count(b)) ++out.count;
  }
  return out;
}

Rational two_part_lym(const RankedPoset& P, const RankedPoset& Q, const ProductFamily& F) {
  if (!is_two_part_sperner(P, Q, F).holds) {
    throw Error(ErrorCode::NotTwoPartSperner, "family is not a 2-part Sperner system");
  }
  Rational sum = 0;
  for (const auto& [a, b] : F) {
    sum += Rational(1, BigInt(P.whitney(P.rank(a))) * Q.whitney(Q.rank(b)));
  }
  return sum;
}

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const ProductFamily& F) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [a, b] : F) j.push_back({a, b});
  return j;
}

ProductFamily product_family_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "product family must be an array of [p, q] pairs");
  std::vector<ProductMember> members;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() || !item[1].is_number_unsigned()) {
      throw Error(ErrorCode::InvalidInput, "product family entries must be [p, q] with non-negative ids");
    }
    members.emplace_back(item[0].get<ElementId>(), item[1].get<ElementId>());
  }
  return ProductFamily(std::move(members));
}

nlohmann::json to_json(const Transversal& T) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [i, j] : T.pairs) pairs.push_back({i, j});
  return {{"pairs", std::move(pairs)}, {"full", T.full}};
}

}  // namespace azposet
