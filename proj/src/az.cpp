#include "azposet/az.hpp"

#include <algorithm>

#include "azposet/sperner.hpp"

namespace azposet {

namespace {

void require_nonempty(const Family& A, std::string_view op) {
  if (A.empty()) throw Error(ErrorCode::EmptyFamily, std::string(op) + " requires a nonempty family");
}

Rational ratio_term(const RankedPoset& P, ElementId x, std::uint64_t W) {
  if (W == 0) return Rational(0);
  return Rational(W, BigInt(P.lower_degree(x)) * P.whitney(P.rank(x)));
}

}  // namespace

std::vector<std::uint64_t> compute_W_all(const RankedPoset& P, const Family& A) {
  P.require_members(A);
  const auto up = upset_mask(P, A);
  std::vector<std::uint64_t> W(P.size(), 0);
  for (ElementId x = 0; x < P.size(); ++x) {
    if (!up[x]) continue;
    for (ElementId y : P.lower_covers(x)) W[x] += up[y] ? 0 : 1;
  }
  return W;
}

std::uint64_t compute_W(const RankedPoset& P, const Family& A, ElementId x) {
  P.require_member(x);
  return compute_W_all(P, A)[x];
}

AZBreakdown az_identity_sum(const RankedPoset& P, const Family& A) {
  P.require_u_poset("az_identity_sum");
  require_nonempty(A, "az_identity_sum");
  const auto W = compute_W_all(P, A);
  const auto up = upset_mask(P, A);
  const ElementId bottom = P.bottom();
  AZBreakdown out;
  out.regular = check_regular(P).holds;
  out.terms.reserve(P.size());
  for (ElementId x = 0; x < P.size(); ++x) {
    AZTerm t;
    t.x = x;
    t.W = W[x];
    t.in_A = A.contains(x);
    t.in_upset = up[x] != 0;
    if (x == bottom && t.in_A) {
      t.convention_bottom = true;
      t.term = 1;
    } else {
      t.term = ratio_term(P, x, W[x]);
    }
    out.total += t.term;
    out.terms.push_back(std::move(t));
  }
  return out;
}

KeyLemmaResult key_lemma_sum(const RankedPoset& P, const Family& A) {
  require_nonempty(A, "key_lemma_sum");
  P.require_members(A);
  if (!check_regular(P).holds) {
    throw Error(ErrorCode::NotRegular, "key_lemma_sum requires a regular poset, got '" + P.name() + "'");
  }
  const auto W = compute_W_all(P, A);
  const auto up = upset_mask(P, A);
  const Rank r = P.max_rank();
  KeyLemmaResult out;
  for (ElementId x = 0; x < P.size(); ++x) {
    const Rank rx = P.rank(x);
    if (rx == r && !up[x]) {
      out.total += Rational(1, P.whitney(r));
    } else if (rx == 0) {
      if (A.contains(x)) out.total += Rational(1, P.whitney(0));
    } else {
      out.total += ratio_term(P, x, W[x]);
    }
  }
  out.bounded_total = az_identity_sum(adjoin_bounds(P), A).total;
  return out;
}

AntichainAZ antichain_az(const RankedPoset& P, const Family& A) {
  require_nonempty(A, "antichain_az");
  P.require_members(A);
  if (!is_antichain(P, A)) throw Error(ErrorCode::NotAntichain, "antichain_az requires an antichain");
  const AZBreakdown b = az_identity_sum(P, A);
  AntichainAZ out;
  for (const AZTerm& t : b.terms) {
    if (t.in_A) {
      out.lym_part += Rational(1, P.whitney(P.rank(t.x)));
    } else {
      out.remainder_part += t.term;
    }
  }
  return out;
}

KSpernerAZ k_sperner_az(const RankedPoset& P, const Family& F, unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "k must be at least 1");
  P.require_members(F);
  if (!is_k_sperner(P, F, k).holds) {
    throw Error(ErrorCode::NotKSperner, "family contains a chain of " + std::to_string(k + 1) + " elements");
  }
  if (F.size() < k) {
    throw Error(ErrorCode::InvalidInput, "a family of " + std::to_string(F.size()) +
                                             " elements cannot be split into " + std::to_string(k) +
                                             " nonempty antichains");
  }
  std::vector<std::vector<ElementId>> parts;
  for (const Family& part : dual_dilworth_decompose(P, F).parts) parts.push_back(part.ids());
  while (parts.size() < k) {
    auto largest = std::max_element(parts.begin(), parts.end(),
                                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const ElementId moved = largest->back();
    largest->pop_back();
    parts.push_back({moved});
  }
  KSpernerAZ out;
  out.lym_part = lym_sum(P, F);
  out.total = out.lym_part;
  for (auto& ids : parts) {
    Family part(std::move(ids));
    const AntichainAZ az = antichain_az(P, part);
    out.remainders.push_back(az.remainder_part);
    out.total += az.remainder_part;
    out.parts.push_back(std::move(part));
  }
  return out;
}

Rational beta(const RankedPoset& P, const LambdaTable& lambda, Rank k, Rank l) {
  if (k > l) throw Error(ErrorCode::InvalidInput, "beta requires k <= l");
  if (l > P.max_rank()) throw Error(ErrorCode::RankOutOfRange, "beta: l exceeds the rank of the poset");
  const auto reg = check_regular(P);
  if (!reg.holds) {
    throw Error(ErrorCode::NotStronglyRegular, "beta requires a strongly regular poset, got '" + P.name() + "'");
  }
  const auto& d = reg.profile->lower;
  Rational sum = 0;
  for (Rank j = 0; j <= l - k; ++j) {
    const Rank i = k + j;
    if (i == 0) {
      sum += Rational(lambda(0, 0, l), P.whitney(0));
      continue;
    }
    const long long lam_prev = static_cast<long long>(lambda(static_cast<long long>(i) - 1, k, i));
    const Rational factor(BigInt(static_cast<long long>(d[i]) - lam_prev));
    sum += Rational(lambda(i, k, l), BigInt(d[i]) * P.whitney(i)) * factor;
  }
  return sum;
}

Rational beta(const RankedPoset& P, Rank k, Rank l) {
  const auto sr = check_strongly_regular(P);
  if (!sr.holds) {
    throw Error(ErrorCode::NotStronglyRegular, "beta requires a strongly regular poset, got '" + P.name() + "'");
  }
  return beta(P, *sr.table, k, l);
}

void validate_skew_system(const RankedPoset& P, const SkewPairSystem& sys) {
  if (sys.pairs.empty()) throw Error(ErrorCode::EmptyFamily, "skew system has no pairs");
  const std::size_t m = sys.pairs.size();
  for (const auto& [a, b] : sys.pairs) {
    P.require_member(a);
    P.require_member(b);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const bool le = P.leq(sys.pairs[i].first, sys.pairs[j].second);
      if (le != (i == j)) {
        throw Error(ErrorCode::SkewViolation,
                    "a_" + std::to_string(i + 1) + (le ? " <= " : " is not <= ") + "b_" + std::to_string(j + 1));
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto [ai, bi] = sys.pairs[i];
      const auto [aj, bj] = sys.pairs[j];
      for (ElementId x = 0; x < P.size(); ++x) {
        if (P.leq(ai, x) && P.leq(x, bi) && P.leq(aj, x) && P.leq(x, bj)) {
          throw Error(ErrorCode::IntervalOverlap, "intervals " + std::to_string(i + 1) + " and " +
                                                      std::to_string(j + 1) + " share element " +
                                                      std::to_string(x));
        }
      }
    }
  }
}

SecondAZResult second_az_identity(const RankedPoset& P, const SkewPairSystem& sys) {
  P.require_u_poset("second_az_identity");
  validate_skew_system(P, sys);
  const auto sr = check_strongly_regular(P);
  if (!sr.holds) {
    throw Error(ErrorCode::NotStronglyRegular,
                "second_az_identity requires a strongly regular poset, got '" + P.name() + "'");
  }
  std::vector<ElementId> as, bs;
  for (const auto& [a, b] : sys.pairs) {
    as.push_back(a);
    bs.push_back(b);
  }
  const Family A(as), B(bs);
  SecondAZResult out;
  for (const auto& [a, b] : sys.pairs) {
    out.betas.push_back(beta(P, *sr.table, P.rank(a), P.rank(b)));
    out.beta_sum += out.betas.back();
  }
  const auto W = compute_W_all(P, A);
  const auto up = upset_mask(P, A);
  const Family down = downset(P, B);
  for (ElementId x = 0; x < P.size(); ++x) {
    if (up[x] && !down.contains(x)) out.remainder += ratio_term(P, x, W[x]);
  }
  out.total = out.beta_sum + out.remainder;
  return out;
}

nlohmann::json to_json(const RankedPoset& P, const AZBreakdown& breakdown) {
  nlohmann::json terms = nlohmann::json::array();
  for (const AZTerm& t : breakdown.terms) {
    if (t.term == 0 && !t.in_A) continue;
    terms.push_back({{"x", t.x},
                     {"label", P.label(t.x)},
                     {"W", t.W},
                     {"term", to_string(t.term)},
                     {"convention_bottom", t.convention_bottom},
                     {"in_A", t.in_A},
                     {"in_upset", t.in_upset}});
  }
  return {{"total", to_string(breakdown.total)}, {"regular", breakdown.regular}, {"terms", std::move(terms)}};
}

}  // namespace azposet
