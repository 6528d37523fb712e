#include <doctest.h>

#include <bit>
#include <random>

#include "azposet/az.hpp"
#include "azposet/families.hpp"
#include "azposet/io.hpp"
#include "azposet/properties.hpp"
#include "azposet/sperner.hpp"
#include "azposet/twopart.hpp"
#include "azposet/verify/oracles.hpp"

using namespace azposet;

namespace {

constexpr int kCases = 60;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  Family family(const RankedPoset& P, double density) {
    std::vector<ElementId> ids;
    for (ElementId a = 0; a < P.size(); ++a) {
      if (coin(density)) ids.push_back(a);
    }
    if (ids.empty()) ids.push_back(ElementId(below(P.size())));
    return Family(std::move(ids));
  }

  Family antichain(const RankedPoset& P) {
    std::vector<ElementId> ids;
    for (std::size_t tries = 0; tries < 2 * P.size(); ++tries) {
      const ElementId a = ElementId(below(P.size()));
      if (std::none_of(ids.begin(), ids.end(), [&](ElementId b) { return P.comparable(a, b); })) ids.push_back(a);
    }
    return Family(std::move(ids));
  }

  ProductFamily product_family(const RankedPoset& P, const RankedPoset& Q, double density) {
    std::vector<ProductMember> members;
    for (ElementId p = 0; p < P.size(); ++p) {
      for (ElementId q = 0; q < Q.size(); ++q) {
        if (coin(density)) members.emplace_back(p, q);
      }
    }
    return ProductFamily(std::move(members));
  }

  RankedPoset graded_poset() {
    std::vector<unsigned> sizes(2 + below(3));
    for (auto& s : sizes) s = unsigned(1 + below(4));
    return oracle::random_graded_poset(sizes, 0.3 + 0.1 * double(below(4)), rng_());
  }

  const RankedPoset& pick(const std::vector<RankedPoset>& pool) { return pool[below(pool.size())]; }

 private:
  std::mt19937_64 rng_;
};

std::vector<RankedPoset> regular_u_posets() {
  std::vector<RankedPoset> out;
  for (const char* spec : {"boolean:3", "boolean:4", "subspace:2,2", "subspace:3,2", "subspace:2,3"}) {
    out.push_back(generate(spec));
  }
  out.push_back(adjoin_bounds(gen_star_power(2, 2)));
  return out;
}

}  // namespace

TEST_CASE("identity terms equal chain entry ratios on regular U-posets") {
  Gen g(1);
  const auto pool = regular_u_posets();
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset& P = g.pick(pool);
    const Family A = g.family(P, 0.15);
    const auto b = az_identity_sum(P, A);
    CHECK(b.total == 1);
    const auto ratios = oracle::chain_entry_ratios(P, A, oracle::maximal_chains(P));
    for (ElementId x = 0; x < P.size(); ++x) CHECK(b.terms[x].term == ratios[x]);
  }
}

TEST_CASE("k-Sperner identity sums to k") {
  Gen g(2);
  const auto pool = regular_u_posets();
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset& P = g.pick(pool);
    const Family F = g.family(P, 0.3);
    const unsigned k = unsigned(longest_chain_length(P, F));
    if (F.size() < k) continue;
    CHECK(k_sperner_az(P, F, k).total == k);
  }
}

TEST_CASE("W agrees with the direct definition") {
  Gen g(3);
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset P = g.graded_poset();
    const Family A = g.family(P, 0.2);
    for (ElementId x = 0; x < P.size(); ++x) CHECK(compute_W(P, A, x) == oracle::brute_W(P, A, x));
  }
}

TEST_CASE("normality modes agree on random graded posets") {
  Gen g(4);
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset P = g.graded_poset();
    const auto flow = check_normal(P, NormalityMode::Flow);
    const auto en = check_normal(P, NormalityMode::Enumerate);
    CHECK(flow.holds == en.holds);
    CHECK(flow.level_holds == en.level_holds);
  }
}

TEST_CASE("coverings exist exactly on normal posets") {
  Gen g(5);
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset P = g.graded_poset();
    if (check_normal(P, NormalityMode::Flow).holds) {
      CHECK(verify_chain_covering(P, build_chain_covering(P)).holds);
    } else {
      CHECK_THROWS_AS(build_chain_covering(P), Error);
    }
  }
}

TEST_CASE("height classes give a minimum antichain partition") {
  Gen g(6);
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset P = g.graded_poset();
    const Family F = g.family(P, 0.5);
    const std::size_t h = longest_chain_length(P, F);
    const auto d = dual_dilworth_decompose(P, F);
    CHECK(d.parts.size() == h);
    for (const auto& part : d.parts) CHECK(is_antichain(P, part));
    CHECK(is_k_sperner(P, F, unsigned(h)).holds);
    if (h > 1) CHECK_FALSE(is_k_sperner(P, F, unsigned(h - 1)).holds);
  }
}

TEST_CASE("antichains of normal posets satisfy the LYM inequality") {
  Gen g(7);
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset P = g.graded_poset();
    if (!check_normal(P, NormalityMode::Flow).holds) continue;
    CHECK(lym_sum(P, g.antichain(P)) <= 1);
  }
}

TEST_CASE("maximum antichain size matches the subset oracle") {
  Gen g(8);
  for (int i = 0; i < kCases / 2; ++i) {
    const RankedPoset P = g.graded_poset();
    CHECK(max_antichain(P).antichain.size() == oracle::max_k_sperner_by_subsets(P, 1).size);
  }
}

TEST_CASE("pairwise and slice two-part tests agree") {
  Gen g(9);
  const std::vector<RankedPoset> pool{gen_boolean(2), gen_boolean(1), generate("chains:3"), gen_fig1a()};
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset& P = g.pick(pool);
    const RankedPoset& Q = g.pick(pool);
    const ProductFamily F = g.product_family(P, Q, 0.25);
    CHECK(is_two_part_sperner(P, Q, F).holds == is_two_part_sperner_by_slices(P, Q, F));
  }
}

TEST_CASE("json round trip preserves random posets") {
  Gen g(10);
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset P = g.graded_poset();
    const RankedPoset Q = poset_from_json(poset_to_json(P));
    CHECK(oracle::isomorphic(P, Q));
    CHECK(Q.covers().size() == P.covers().size());
  }
}

TEST_CASE("per-level chain counts sum to the total") {
  Gen g(11);
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset P = g.graded_poset();
    const auto counts = count_maximal_chains(P);
    for (Rank r = 0; r <= P.max_rank(); ++r) {
      BigInt sum = 0;
      for (ElementId x : P.level(r)) sum += counts.through[x];
      CHECK(sum == counts.total);
    }
    const auto chains = enumerate_maximal_chains(P);
    CHECK(BigInt(chains.size()) == counts.total);
    for (const auto& c : chains) CHECK(c.size() == P.num_levels());
  }
}

TEST_CASE("upset and downset are idempotent and monotone") {
  Gen g(12);
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset P = g.graded_poset();
    const Family A = g.family(P, 0.2);
    const Family U = upset(P, A);
    CHECK(upset(P, U) == U);
    CHECK(downset(P, downset(P, A)) == downset(P, A));
    std::vector<ElementId> more(A.begin(), A.end());
    more.push_back(ElementId(g.below(P.size())));
    const Family U2 = upset(P, Family(more));
    for (ElementId x : U) CHECK(U2.contains(x));
    for (Rank r = 0; r <= P.max_rank(); ++r) {
      std::vector<ElementId> direct;
      for (ElementId x : P.level(r)) {
        if (std::any_of(A.begin(), A.end(), [&](ElementId a) { return P.rank(a) <= r && P.leq(a, x); })) {
          direct.push_back(x);
        }
      }
      const Family shade = gamma_up_set_to_level(P, A, r);
      const Family expected(std::move(direct));
      std::vector<ElementId> below_r;
      for (ElementId a : A) {
        if (P.rank(a) <= r) below_r.push_back(a);
      }
      if (!below_r.empty()) CHECK(shade == expected);
    }
  }
}

TEST_CASE("boolean lattices arise three ways") {
  for (unsigned n = 1; n <= 4; ++n) {
    const RankedPoset B = gen_boolean(n);
    CHECK(oracle::isomorphic(B, gen_chain_product(std::vector<unsigned>(n, 2))));
    CHECK(oracle::isomorphic(B, gen_star_power(1, n)));
  }
}

TEST_CASE("product whitney numbers are a convolution") {
  Gen g(13);
  const std::vector<RankedPoset> pool{gen_boolean(2), gen_fig1a(), generate("chains:3,2"), generate("star:2,2"),
                                      generate("subspace:2,3")};
  for (int i = 0; i < 20; ++i) {
    const RankedPoset& P = g.pick(pool);
    const RankedPoset& Q = g.pick(pool);
    const auto a = P.whitney_numbers();
    const auto b = Q.whitney_numbers();
    std::vector<std::uint64_t> conv(a.size() + b.size() - 1, 0);
    for (std::size_t s = 0; s < a.size(); ++s) {
      for (std::size_t t = 0; t < b.size(); ++t) conv[s + t] += a[s] * b[t];
    }
    CHECK(product(P, Q).whitney_numbers() == conv);
  }
}

TEST_CASE("regular posets are normal and satisfy the level size identity") {
  for (const char* spec : {"boolean:5", "star:2,3", "star:3,2", "subspace:3,2", "subspace:2,5", "affine:2,2",
                           "affine:2,3", "trunc(boolean:5,1,3)"}) {
    CAPTURE(spec);
    const RankedPoset P = generate(spec);
    const auto r = check_regular(P);
    REQUIRE(r.holds);
    CHECK(check_level_size_identity(P, *r.profile));
    CHECK(check_normal(P, NormalityMode::Flow).holds);
  }
}

TEST_CASE("lambda entries sum to the interval size") {
  for (const char* spec : {"boolean:4", "subspace:3,2", "subspace:2,3"}) {
    CAPTURE(spec);
    const RankedPoset P = generate(spec);
    const auto sr = check_strongly_regular(P);
    REQUIRE(sr.holds);
    for (ElementId a = 0; a < P.size(); ++a) {
      for (ElementId b = 0; b < P.size(); ++b) {
        if (!P.leq(a, b)) continue;
        std::uint64_t interval = 0;
        for (ElementId x = 0; x < P.size(); ++x) interval += P.leq(a, x) && P.leq(x, b);
        std::uint64_t sum = 0;
        for (Rank i = P.rank(a); i <= P.rank(b); ++i) sum += (*sr.table)(i, P.rank(a), P.rank(b));
        CHECK(sum == interval);
      }
    }
  }
}

TEST_CASE("W is the size of an intersection on boolean lattices") {
  Gen g(14);
  for (int i = 0; i < kCases; ++i) {
    const unsigned n = unsigned(2 + g.below(4));
    const RankedPoset B = gen_boolean(n);
    const Family A = g.family(B, 0.15);
    for (ElementId x = 0; x < B.size(); ++x) {
      ElementId meet = ElementId((1u << n) - 1);
      bool any = false;
      for (ElementId a : A) {
        if ((a & x) == a) {
          meet &= a;
          any = true;
        }
      }
      if (any) CHECK(compute_W(B, A, x) == std::uint64_t(std::popcount(meet)));
    }
  }
}

TEST_CASE("key lemma path matches the bounded poset") {
  Gen g(15);
  const std::vector<RankedPoset> pool{gen_star_power(2, 2), gen_star_power(3, 2), generate("affine:2,2"),
                                      truncate(gen_boolean(4), 1, 3)};
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset& P = g.pick(pool);
    const Family A = g.family(P, 0.15);
    const RankedPoset T = adjoin_bounds(P);
    const auto r = key_lemma_sum(P, A);
    CHECK(r.total == az_identity_sum(T, A).total);
    CHECK(r.total == 1);
  }
}

TEST_CASE("antichain parts are non-negative and lym part grows with A") {
  Gen g(16);
  const std::vector<RankedPoset> pool{gen_boolean(3), gen_boolean(4)};
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset& P = g.pick(pool);
    const Family A = g.antichain(P);
    const auto r = antichain_az(P, A);
    CHECK(r.lym_part >= 0);
    CHECK(r.remainder_part >= 0);
    CHECK(r.total() == 1);
    for (ElementId x = 0; x < P.size(); ++x) {
      if (A.contains(x) || std::any_of(A.begin(), A.end(), [&](ElementId a) { return P.comparable(a, x); })) continue;
      std::vector<ElementId> more(A.begin(), A.end());
      more.push_back(x);
      const auto bigger = antichain_az(P, Family(more));
      CHECK(bigger.lym_part >= r.lym_part);
      CHECK(bigger.remainder_part <= r.remainder_part);
      break;
    }
  }
}

TEST_CASE("beta formula matches interval sums on strongly regular posets") {
  for (const char* spec : {"boolean:4", "subspace:3,2"}) {
    CAPTURE(spec);
    const RankedPoset P = generate(spec);
    for (ElementId a = 0; a < P.size(); ++a) {
      for (ElementId b = 0; b < P.size(); ++b) {
        if (P.leq(a, b)) CHECK(beta(P, P.rank(a), P.rank(b)) == oracle::interval_beta(P, a, b));
      }
    }
  }
}

TEST_CASE("decomposition of k-Sperner families reunites to the family") {
  Gen g(17);
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset P = g.graded_poset();
    const Family F = g.family(P, 0.4);
    const auto d = dual_dilworth_decompose(P, F);
    std::vector<ElementId> all;
    for (const auto& part : d.parts) all.insert(all.end(), part.begin(), part.end());
    CHECK(all.size() == F.size());
    CHECK(Family(all) == F);
  }
}

TEST_CASE("two-part LYM never exceeds the shorter rank plus one") {
  Gen g(18);
  const std::vector<RankedPoset> pool{gen_boolean(2), generate("chains:3"), gen_boolean(1)};
  for (int i = 0; i < kCases; ++i) {
    const RankedPoset& P = g.pick(pool);
    const RankedPoset& Q = g.pick(pool);
    ProductFamily F = g.product_family(P, Q, 0.3);
    std::vector<ProductMember> kept;
    for (const auto& m : F) {
      kept.push_back(m);
      if (!is_two_part_sperner(P, Q, ProductFamily(kept)).holds) kept.pop_back();
    }
    if (kept.empty()) continue;
    const Rank n2 = std::min(P.max_rank(), Q.max_rank());
    CHECK(two_part_lym(P, Q, ProductFamily(kept)) <= n2 + 1);
  }
}

TEST_CASE("two-part identity totals follow the second factor") {
  Gen g(19);
  const RankedPoset P = gen_boolean(2);
  const RankedPoset Q = generate("chains:4");
  for (int i = 0; i < 20; ++i) {
    std::vector<ProductMember> members;
    for (ElementId q = 0; q < Q.size(); ++q) members.emplace_back(ElementId(g.below(P.size())), q);
    for (ElementId p = 0; p < P.size(); ++p) members.emplace_back(p, ElementId(g.below(Q.size())));
    const ProductFamily A(members);
    CHECK(two_part_az_sum(P, Q, A).total == Q.max_rank() + 1);
    CHECK(two_part_az_sum(Q, P, A.swapped()).total == P.max_rank() + 1);
  }
}
