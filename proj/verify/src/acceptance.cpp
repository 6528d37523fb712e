#include "azposet/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "azposet/az.hpp"
#include "azposet/families.hpp"
#include "azposet/properties.hpp"
#include "azposet/random.hpp"
#include "azposet/sperner.hpp"
#include "azposet/twopart.hpp"
#include "azposet/verify/oracles.hpp"

namespace azposet::verify {

namespace {

// Counts checked cases and keeps the first few failure descriptions.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok) {
      ++failures_;
      if (messages_.size() < 5) messages_.push_back(what);
    }
  }
  void note(const std::string& text) { notes_.push_back(text); }

  std::size_t cases() const { return cases_; }
  bool ok() const { return failures_ == 0 && cases_ > 0; }

  std::string summary() const {
    std::ostringstream out;
    out << cases_ << " checks, " << failures_ << " failed";
    for (const auto& n : notes_) out << "; " << n;
    for (const auto& m : messages_) out << "; FAIL " << m;
    return out.str();
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

std::vector<ElementId> all_ids(const RankedPoset& P) {
  std::vector<ElementId> ids(P.size());
  std::iota(ids.begin(), ids.end(), ElementId{0});
  return ids;
}

std::string show(const Family& F) {
  std::string s = "{";
  for (ElementId a : F) s += (s.size() > 1 ? "," : "") + std::to_string(a);
  return s + "}";
}

Rational sum_of(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

ElementId by_label(const RankedPoset& P, std::string_view label) {
  const auto id = P.find_label(label);
  if (!id) throw Error(ErrorCode::InvalidInput, "no element labelled " + std::string(label));
  return *id;
}

// Posets used by the cross-checks of several criteria.
std::vector<RankedPoset> test_posets() {
  std::vector<RankedPoset> out;
  for (const char* spec :
       {"boolean:1", "boolean:2", "boolean:3", "boolean:4", "boolean:5", "star:1,3", "star:2,2", "star:2,3",
        "star:3,2", "subspace:2,2", "subspace:3,2", "subspace:4,2", "subspace:2,3", "subspace:3,3",
        "affine:1,2", "affine:2,2", "affine:2,3", "affine:3,2", "chains:3,2", "chains:3,2,2", "chains:3,3",
        "chains:4,2", "chains:4,3,2", "divisor:12", "divisor:72", "divisor:360", "fig1a", "fig1b",
        "trunc(boolean:5,1,3)", "trunc(subspace:4,2,1,3)", "trunc(star:2,3,1,2)", "prod(boolean:2,chains:3,2)",
        "prod(fig1a,boolean:1)"}) {
    out.push_back(generate(spec));
  }
  return out;
}

// ---------------------------------------------------------------- 1

CriterionResult criterion_az_identity() {
  Tally t;
  std::vector<RankedPoset> posets;
  for (unsigned n = 1; n <= 5; ++n) posets.push_back(gen_boolean(n));
  posets.push_back(adjoin_bounds(gen_star_power(2, 3)));
  posets.push_back(gen_subspace_lattice(3, 2));
  const RankedPoset L42 = gen_subspace_lattice(4, 2);
  if (L42.size() <= 10000) posets.push_back(L42);
  posets.push_back(adjoin_bounds(truncate(gen_boolean(5), 1, 3)));
  posets.push_back(adjoin_bounds(truncate(L42, 1, 3)));
  posets.push_back(adjoin_bounds(truncate(gen_star_power(2, 3), 1, 2)));

  std::size_t families = 0;
  for (std::size_t p = 0; p < posets.size(); ++p) {
    const RankedPoset& P = posets[p];
    t.expect(P.is_u_poset() && check_regular(P).holds, P.name() + " is a regular U-poset");
    const auto chains = oracle::maximal_chains(P);
    const auto ids = all_ids(P);
    std::mt19937_64 rng(1000 + p);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t size = 1 + rng() % std::min<std::size_t>(P.size(), 12);
      const Family A(sample_distinct(ids, size, rng));
      const AZBreakdown az = az_identity_sum(P, A);
      const auto ratios = oracle::chain_entry_ratios(P, A, chains);
      bool terms_match = true;
      for (ElementId x = 0; x < P.size(); ++x) terms_match = terms_match && az.terms[x].term == ratios[x];
      t.expect(az.total == 1 && sum_of(ratios) == 1 && terms_match,
               P.name() + " A=" + show(A) + " total=" + to_string(az.total));
      ++families;
    }
  }
  t.note(std::to_string(posets.size()) + " posets, " + std::to_string(families) + " families");
  return {1, "", t.ok(), t.summary()};
}

// ---------------------------------------------------------------- 2

CriterionResult criterion_counterexamples() {
  Tally t;
  const RankedPoset a = gen_fig1a();
  const RankedPoset b = gen_fig1b();
  const Family A{by_label(a, "a"), by_label(a, "c")};
  const AZBreakdown az = az_identity_sum(a, A);
  t.expect(az.total == Rational(5, 4), "fig1a total " + to_string(az.total) + " expected 5/4");
  t.expect(az.terms[by_label(a, "a")].term == Rational(1, 2) && az.terms[by_label(a, "c")].term == Rational(1, 2) &&
               az.terms[by_label(a, "b")].term == Rational(1, 4),
           "fig1a terms 1/2 + 1/2 + 1/4");
  const auto reg = check_regular(a);
  t.expect(!reg.holds && reg.violation && reg.violation->rank == 2, "fig1a not regular, witness at rank 2");
  const auto lc = check_level_connected(b);
  t.expect(!lc.holds && lc.first_disconnected == Rank{1}, "fig1b disconnected at G_{1,2}");
  for (const RankedPoset* P : {&a, &b}) {
    t.expect(check_normal(*P, NormalityMode::Flow).holds, P->name() + " normal (flow)");
    t.expect(check_normal(*P, NormalityMode::Enumerate).holds, P->name() + " normal (enumeration)");
  }
  t.note("fig1a total " + to_string(az.total));
  return {2, "", t.ok(), t.summary()};
}

// ---------------------------------------------------------------- 3

CriterionResult criterion_key_lemma() {
  Tally t;
  const RankedPoset P = gen_affine_poset(2, 2);
  const RankedPoset Pstar = adjoin_bounds(P);
  const auto chains = oracle::maximal_chains(Pstar);
  t.expect(!P.is_u_poset(), "affine poset has no universal bottom");

  std::vector<Family> families;
  const std::size_t n = P.size();
  for (ElementId i = 0; i < n; ++i) {
    families.push_back(Family{i});
    for (ElementId j = i + 1; j < n; ++j) {
      families.push_back(Family{i, j});
      for (ElementId k = j + 1; k < n; ++k) families.push_back(Family{i, j, k});
    }
  }
  const std::size_t exhaustive = families.size();
  std::mt19937_64 rng(3000);
  const auto ids = all_ids(P);
  for (int trial = 0; trial < 300; ++trial) {
    families.emplace_back(sample_distinct(ids, 1 + rng() % n, rng));
  }

  for (const Family& A : families) {
    const KeyLemmaResult kl = key_lemma_sum(P, A);
    const AZBreakdown star = az_identity_sum(Pstar, A);
    const auto ratios = oracle::chain_entry_ratios(Pstar, A, chains);
    bool terms_match = true;
    for (ElementId x = 0; x < Pstar.size(); ++x) terms_match = terms_match && star.terms[x].term == ratios[x];
    t.expect(kl.total == 1 && kl.bounded_total == kl.total && star.total == 1 && terms_match,
             "A=" + show(A) + " sum=" + to_string(kl.total) + " bounded=" + to_string(kl.bounded_total));
  }
  t.note(std::to_string(families.size()) + " families (" + std::to_string(exhaustive) + " exhaustive up to size 3)");
  if (families.size() < 500) t.expect(false, "fewer than 500 cases");
  return {3, "", t.ok(), t.summary()};
}

// ---------------------------------------------------------------- 4

Rational brute_second_identity(const RankedPoset& P, const SkewPairSystem& sys) {
  Rational total = 0;
  std::vector<ElementId> as;
  for (const auto& [a, b] : sys.pairs) {
    total += oracle::interval_beta(P, a, b);
    as.push_back(a);
  }
  const Family A(as);
  for (ElementId x = 0; x < P.size(); ++x) {
    const bool in_up = std::any_of(sys.pairs.begin(), sys.pairs.end(), [&](const auto& p) { return P.leq(p.first, x); });
    const bool in_down = std::any_of(sys.pairs.begin(), sys.pairs.end(), [&](const auto& p) { return P.leq(x, p.second); });
    if (in_up && !in_down) {
      total += Rational(oracle::brute_W(P, A, x)) / (Rational(P.lower_degree(x)) * P.whitney(P.rank(x)));
    }
  }
  return total;
}

CriterionResult criterion_second_identity() {
  Tally t;
  std::size_t systems = 0, multi = 0;
  for (unsigned n : {3u, 4u}) {
    const RankedPoset B = gen_boolean(n);
    const auto table = check_strongly_regular(B);
    t.expect(table.holds, B.name() + " strongly regular");
    for (Rank k = 0; k <= n; ++k) {
      for (Rank l = k; l <= n; ++l) {
        const Rational expect(1, oracle::binomial(n - l + k, k));
        const Rational got = beta(B, *table.table, k, l);
        t.expect(got == expect, B.name() + " beta(" + std::to_string(k) + "," + std::to_string(l) + ")=" +
                                    to_string(got) + " expected " + to_string(expect));
      }
    }
    std::mt19937_64 rng(4000 + n);
    std::size_t found = 0;
    for (int attempt = 0; attempt < 20000 && found < 30; ++attempt) {
      const std::size_t m = 1 + rng() % 3;
      SkewPairSystem sys;
      for (std::size_t i = 0; i < m; ++i) {
        const ElementId a = ElementId(rng() % B.size());
        const Family up = upset(B, Family{a});
        sys.pairs.emplace_back(a, up.ids()[rng() % up.size()]);
      }
      try {
        validate_skew_system(B, sys);
      } catch (const Error&) {
        continue;
      }
      ++found;
      ++systems;
      if (m > 1) ++multi;
      const SecondAZResult r = second_az_identity(B, sys);
      const Rational brute = brute_second_identity(B, sys);
      t.expect(r.total == 1 && brute == 1, B.name() + " skew system total " + to_string(r.total));
    }
  }
  t.note(std::to_string(systems) + " skew systems (" + std::to_string(multi) + " with several pairs)");
  if (systems < 50) t.expect(false, "fewer than 50 skew systems");

  const RankedPoset L = gen_subspace_lattice(3, 2);
  const auto sr = check_strongly_regular(L);
  t.expect(sr.holds, "L_3(2) strongly regular");
  std::size_t pairs = 0;
  if (sr.holds) {
    for (ElementId a = 0; a < L.size(); ++a) {
      for (ElementId b : upset(L, Family{a})) {
        const Rational formula = beta(L, *sr.table, L.rank(a), L.rank(b));
        t.expect(formula == oracle::interval_beta(L, a, b),
                 "L_3(2) beta mismatch on [" + std::to_string(a) + "," + std::to_string(b) + "]");
        ++pairs;
      }
    }
  }
  t.note(std::to_string(pairs) + " comparable pairs of L_3(2)");
  return {4, "", t.ok(), t.summary()};
}

// ---------------------------------------------------------------- 5

CriterionResult criterion_chain_coverings() {
  Tally t;
  std::size_t built = 0;
  for (const RankedPoset& P : test_posets()) {
    if (!check_normal(P, NormalityMode::Flow).holds) continue;
    const ChainCovering cov = build_chain_covering(P);
    const CoveringVerification v = verify_chain_covering(P, cov);
    t.expect(v.holds && v.marginals_hold && v.chains_hold && v.total_mass == 1,
             P.name() + " covering fails" +
                 (v.violated_element ? " at element " + std::to_string(*v.violated_element) : std::string()));
    ++built;
  }
  try {
    build_chain_covering(oracle::non_normal_example());
    t.expect(false, "non-normal example produced a covering");
  } catch (const Error& e) {
    t.expect(e.code() == ErrorCode::NotNormal, std::string("non-normal example: ") + e.what());
  }
  t.note(std::to_string(built) + " normal posets covered, including fig1a and C(3,2,2)");
  return {5, "", t.ok(), t.summary()};
}

// ---------------------------------------------------------------- 6

CriterionResult criterion_strict_sperner() {
  Tally t;
  std::size_t tested = 0;
  for (const char* spec :
       {"boolean:1", "boolean:2", "boolean:3", "boolean:4", "chains:3,3", "chains:3,2,2",
        "star:2,2", "star:3,1", "subspace:2,2", "subspace:2,3", "subspace:3,2", "affine:1,2", "affine:2,2",
        "divisor:30", "divisor:36", "trunc(boolean:4,1,3)", "prod(chains:3,boolean:2)"}) {
    const RankedPoset P = generate(spec);
    if (P.size() > 16) {
      t.expect(false, std::string(spec) + " exceeds 16 elements");
      continue;
    }
    t.expect(check_strictly_normal(P).holds, std::string(spec) + " strictly normal");
    const StrictSpernerReport r = check_strict_k_sperner(P, 1, StrictSpernerMode::Exhaustive);
    const auto brute = oracle::max_k_sperner_by_subsets(P, 1);
    const bool brute_homogeneous =
        std::all_of(brute.families.begin(), brute.families.end(), [&](const Family& F) { return is_homogeneous(P, F); });
    t.expect(r.holds && brute_homogeneous && r.maximum_size == brute.size && r.maxima == brute.families.size() &&
                 maximum_k_sperner_families(P, 1) == brute.families,
             std::string(spec) + " strict Sperner");
    ++tested;
  }
  const RankedPoset a = gen_fig1a();
  const Family ac{by_label(a, "a"), by_label(a, "c")};
  const StrictSpernerReport r = check_strict_k_sperner(a, 1, StrictSpernerMode::Exhaustive);
  t.expect(!r.holds && r.witness == ac && r.maximum_size == 2, "fig1a witness {a,c}");
  const auto brute = oracle::max_k_sperner_by_subsets(a, 1);
  t.expect(std::find(brute.families.begin(), brute.families.end(), ac) != brute.families.end(),
           "fig1a brute force lists {a,c} as a maximum antichain");
  t.note(std::to_string(tested) + " strictly normal posets; fig1a witness " + (r.witness ? show(*r.witness) : "none"));
  return {6, "", t.ok(), t.summary()};
}

// ---------------------------------------------------------------- 7

ProductFamily random_full_slices(const RankedPoset& P, const RankedPoset& Q, std::mt19937_64& rng) {
  const auto ids = all_ids(P);
  std::vector<ProductMember> members;
  for (ElementId y = 0; y < Q.size(); ++y) {
    for (ElementId x : sample_distinct(ids, 1 + rng() % P.size(), rng)) members.emplace_back(x, y);
  }
  return ProductFamily(std::move(members));
}

// Random maximal 2-part Sperner family built by greedy insertion.
ProductFamily random_two_part_sperner(const RankedPoset& P, const RankedPoset& Q, std::mt19937_64& rng) {
  std::vector<ProductMember> all;
  for (ElementId x = 0; x < P.size(); ++x) {
    for (ElementId y = 0; y < Q.size(); ++y) all.emplace_back(x, y);
  }
  for (std::size_t i = 0; i < all.size(); ++i) std::swap(all[i], all[i + rng() % (all.size() - i)]);
  std::vector<ProductMember> chosen;
  for (const auto& [x, y] : all) {
    const bool clash = std::any_of(chosen.begin(), chosen.end(), [&](const ProductMember& m) {
      const auto [u, v] = m;
      if (x != u && y != v) return false;
      return (P.leq(x, u) && Q.leq(y, v)) || (P.leq(u, x) && Q.leq(v, y));
    });
    if (!clash) chosen.emplace_back(x, y);
  }
  return ProductFamily(std::move(chosen));
}

CriterionResult criterion_two_part_az() {
  Tally t;
  std::size_t sums = 0, identities = 0;
  const std::vector<std::pair<RankedPoset, RankedPoset>> products{{gen_boolean(2), gen_boolean(1)},
                                                                  {gen_boolean(2), gen_boolean(2)}};
  for (std::size_t p = 0; p < products.size(); ++p) {
    const auto& [P, Q] = products[p];
    const Rational expected(Q.max_rank() + 1);
    const auto chains = oracle::maximal_chains(P);
    std::mt19937_64 rng(7000 + p);
    for (int trial = 0; trial < 100; ++trial) {
      const ProductFamily A = random_full_slices(P, Q, rng);
      const Rational total = two_part_az_sum(P, Q, A).total;
      Rational brute = 0;
      for (ElementId y = 0; y < Q.size(); ++y) {
        brute += sum_of(oracle::chain_entry_ratios(P, A.slice_at_q(y), chains)) / Q.whitney(Q.rank(y));
      }
      t.expect(total == expected && brute == expected, P.name() + " x " + Q.name() + " total " + to_string(total));
      ++sums;
    }
    std::vector<ProductFamily> sperner{well_paired_family(P, Q)};
    for (int attempt = 0; attempt < 2000 && sperner.size() < 25; ++attempt) {
      ProductFamily F = random_two_part_sperner(P, Q, rng);
      bool full = true;
      for (ElementId y = 0; y < Q.size(); ++y) full = full && !F.slice_at_q(y).empty();
      if (full && std::find(sperner.begin(), sperner.end(), F) == sperner.end()) sperner.push_back(std::move(F));
    }
    for (const ProductFamily& F : sperner) {
      const TwoPartIdentity id = two_part_sperner_identity(P, Q, F);
      t.expect(id.total == expected && id.lym_part + id.remainder == expected &&
                   id.lym_part == two_part_lym(P, Q, F) && id.remainder >= 0,
               P.name() + " x " + Q.name() + " decomposition " + to_string(id.lym_part) + " + " +
                   to_string(id.remainder));
      ++identities;
    }
  }
  t.note(std::to_string(sums) + " identity sums, " + std::to_string(identities) + " 2-part Sperner decompositions");
  return {7, "", t.ok(), t.summary()};
}

// ---------------------------------------------------------------- 8 and 9

struct ProductCase {
  std::string name;
  RankedPoset P, Q;
};

std::vector<ProductCase> strict_products() {
  return {{"B_2 x B_2", gen_boolean(2), gen_boolean(2)},
          {"B_2 x C(3)", gen_boolean(2), gen_chain_product({3})},
          {"C(3) x C(3)", gen_chain_product({3}), gen_chain_product({3})}};
}

CriterionResult criterion_strict_two_part() {
  Tally t;
  // Values of the six level pairings of B_2 x B_2, in lexicographic order.
  const std::vector<BigInt> frozen_table{6, 5, 5, 5, 5, 6};
  std::ostringstream sizes;
  for (const ProductCase& c : strict_products()) {
    const StrictTwoPartReport r = verify_strict_two_part(c.P, c.Q);
    const TransversalResult best = best_full_transversal(c.P, c.Q);
    const auto brute = oracle::max_two_part_by_subsets(c.P, c.Q);
    t.expect(r.holds && r.non_homogeneous_maxima == 0, c.name + " has a non-well-paired maximum");
    t.expect(BigInt(r.maximum_size) == best.size && best.size == r.well_paired_size,
             c.name + " maximum " + std::to_string(r.maximum_size) + " vs transversal " + to_string(best.size));
    t.expect(brute.size == r.maximum_size && brute.families == r.families, c.name + " MIS disagrees with subset scan");
    for (const ProductFamily& F : r.families) {
      t.expect(is_two_part_sperner(c.P, c.Q, F).holds && is_well_paired(c.P, c.Q, F), c.name + " maximum not well-paired");
    }
    sizes << c.name << " max " << r.maximum_size << " (" << r.maxima << " maxima) ";
  }
  const RankedPoset B2 = gen_boolean(2);
  const auto table = oracle::transversal_values(B2, B2);
  t.expect(table == frozen_table, "B_2 x B_2 permutation table changed");
  t.expect(*std::max_element(table.begin(), table.end()) == 6 && best_full_transversal(B2, B2).size == 6,
           "B_2 x B_2 optimum is 6");
  t.note(sizes.str());
  return {8, "", t.ok(), t.summary()};
}

CriterionResult criterion_two_part_lym() {
  Tally t;
  std::size_t families = 0, subfamilies = 0, chain_pairs = 0;
  for (const ProductCase& c : strict_products()) {
    const std::size_t n2 = std::min(c.P.max_rank(), c.Q.max_rank());
    const Rational target(n2 + 1);
    const auto maxima = max_two_part_sperner_exact(c.P, c.Q, true).families;
    const ChainCovering f1 = build_chain_covering(c.P);
    const ChainCovering f2 = build_chain_covering(c.Q);
    const auto chains1 = enumerate_maximal_chains(c.P);
    const auto chains2 = enumerate_maximal_chains(c.Q);
    for (const ProductFamily& F : maxima) {
      t.expect(two_part_lym(c.P, c.Q, F) == target, c.name + " maximum with LYM sum != n_2+1");
      ++families;
      for (std::size_t drop = 0; drop < F.size(); ++drop) {
        std::vector<ProductMember> rest = F.members();
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
        t.expect(two_part_lym(c.P, c.Q, ProductFamily(rest)) < target, c.name + " subfamily reaches n_2+1");
        ++subfamilies;
      }
      Rational meeting = 0;
      for (const auto& C1 : chains1) {
        for (const auto& C2 : chains2) {
          const Rational g = f1.chain_weight(c.P, C1) * f2.chain_weight(c.Q, C2);
          const ChainPairBound b = chain_pair_bound(c.P, c.Q, F, C1, C2);
          t.expect(b.count <= b.bound, c.name + " chain pair above the bound");
          if (g > 0) {
            t.expect(b.count == n2 + 1, c.name + " positive-weight chain pair meets F in " + std::to_string(b.count));
            ++chain_pairs;
          }
          if (b.count > 0) meeting += g;
        }
      }
      t.expect(meeting == 1, c.name + " weight of chain pairs meeting F is " + to_string(meeting));
    }
  }
  t.note(std::to_string(families) + " maxima, " + std::to_string(subfamilies) + " strict subfamilies, " +
         std::to_string(chain_pairs) + " weighted chain pairs");
  return {9, "", t.ok(), t.summary()};
}

// ---------------------------------------------------------------- 10

CriterionResult criterion_cross_oracles() {
  Tally t;
  std::vector<RankedPoset> posets = test_posets();
  posets.push_back(oracle::non_normal_example());
  std::mt19937_64 seeds(10000);
  for (int i = 0; i < 40; ++i) {
    std::vector<unsigned> sizes(2 + seeds() % 3);
    for (auto& s : sizes) s = 1 + unsigned(seeds() % 6);
    posets.push_back(oracle::random_graded_poset(sizes, 0.15 + 0.1 * double(seeds() % 4), seeds()));
  }
  std::size_t compared = 0, non_normal = 0, regular = 0;
  for (const RankedPoset& P : posets) {
    const NormalityReport flow = check_normal(P, NormalityMode::Flow);
    if (!flow.holds) ++non_normal;
    try {
      const NormalityReport en = check_normal(P, NormalityMode::Enumerate);
      t.expect(en.holds == flow.holds && en.level_holds == flow.level_holds, P.name() + " normality modes disagree");
      ++compared;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::LevelTooLarge) throw;
    }
    if (!flow.holds) {
      // The flow witness must violate normalized matching.
      const Rank i = *flow.witness_level;
      const Family shadow = gamma_down_set_to_level(P, flow.witness, static_cast<long long>(i) - 1);
      t.expect(BigInt(flow.witness.size()) * P.whitney(i - 1) > BigInt(shadow.size()) * P.whitney(i),
               P.name() + " flow witness does not violate normality");
    }
    const auto reg = check_regular(P);
    if (reg.holds) {
      t.expect(check_level_size_identity(P, *reg.profile), P.name() + " level-size identity");
      ++regular;
    }
  }
  std::size_t lattices = 0;
  for (const auto& [q, max_n] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 6}, {3, 5}, {4, 4}, {5, 4}, {7, 3}, {8, 3}, {9, 3}}) {
    for (unsigned n = 1; n <= max_n; ++n) {
      const RankedPoset L = gen_subspace_lattice(n, q);
      bool match = L.max_rank() == n;
      for (unsigned k = 0; k <= n && match; ++k) match = BigInt(L.whitney(k)) == oracle::gaussian_binomial(n, k, q);
      t.expect(match, L.name() + " Whitney numbers differ from Gaussian binomials");
      ++lattices;
    }
  }
  t.note(std::to_string(compared) + " posets compared in both modes (" + std::to_string(non_normal) +
         " non-normal), " + std::to_string(regular) + " regular, " + std::to_string(lattices) + " subspace lattices");
  return {10, "", t.ok(), t.summary()};
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "identity sum equals 1 on regular U-posets", 60.0, criterion_az_identity},
      {2, "non-regular and non-level-connected counterexamples", 0.0, criterion_counterexamples},
      {3, "identity without a universal bottom", 0.0, criterion_key_lemma},
      {4, "interval sums and skew pair identity", 0.0, criterion_second_identity},
      {5, "regular chain coverings", 0.0, criterion_chain_coverings},
      {6, "strict Sperner property by exhaustive search", 0.0, criterion_strict_sperner},
      {7, "two-part identity sums", 0.0, criterion_two_part_az},
      {8, "maximum two-part Sperner families are well-paired", 120.0, criterion_strict_two_part},
      {9, "two-part LYM equality and chain pair bound", 0.0, criterion_two_part_lym},
      {10, "cross-oracle consistency", 0.0, criterion_cross_oracles},
  };
  return list;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  for (const Criterion& c : criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.id = c.id;
    r.name = c.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_budget_seconds > 0 && r.seconds > c.time_budget_seconds) {
      r.pass = false;
      r.detail += "; exceeded time budget of " + std::to_string(c.time_budget_seconds) + " s";
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace azposet::verify
