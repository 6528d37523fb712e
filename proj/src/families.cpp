#include "azposet/families.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>

#include "galois_field.hpp"

namespace azposet {

namespace {

constexpr std::size_t kLabelLimit = std::size_t{1} << 16;

void require_size(std::string_view what, long double count, std::size_t cap = kMaxGeneratedElements) {
  if (count > static_cast<long double>(cap)) {
    throw Error(ErrorCode::SizeLimit, std::string(what) + " would have more than " +
                                          std::to_string(cap) + " elements");
  }
}

std::string join_digits(std::span<const std::uint8_t> v) {
  std::string s;
  for (auto d : v) s.push_back(static_cast<char>('0' + d));
  return s;
}

std::string tuple_label(std::span<const unsigned> coords, char open = '(', char close = ')') {
  std::string s(1, open);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(coords[i]);
  }
  s.push_back(close);
  return s;
}

// Mixed-radix encoding of coordinate tuples as dense ids.
struct TupleSpace {
  std::vector<unsigned> radix;
  std::size_t count = 1;

  explicit TupleSpace(std::vector<unsigned> r) : radix(std::move(r)) {
    for (unsigned k : radix) count *= k;
  }
  std::vector<unsigned> decode(std::size_t id) const {
    std::vector<unsigned> c(radix.size());
    for (std::size_t i = radix.size(); i-- > 0;) {
      c[i] = static_cast<unsigned>(id % radix[i]);
      id /= radix[i];
    }
    return c;
  }
  std::size_t encode(std::span<const unsigned> c) const {
    std::size_t id = 0;
    for (std::size_t i = 0; i < radix.size(); ++i) id = id * radix[i] + c[i];
    return id;
  }
};

}  // namespace

// ---------------------------------------------------------------- Boolean

RankedPoset gen_boolean(unsigned n) {
  if (n > 20) throw Error(ErrorCode::SizeLimit, "Boolean lattices are limited to n <= 20");
  const std::size_t count = std::size_t{1} << n;
  const bool labelled = count <= kLabelLimit;
  std::vector<ElementSpec> elements(count);
  std::vector<CoverEdge> covers;
  covers.reserve(count * n / 2);
  for (std::size_t s = 0; s < count; ++s) {
    std::string label;
    if (labelled) {
      std::vector<unsigned> members;
      for (unsigned i = 0; i < n; ++i) {
        if (s >> i & 1U) members.push_back(i + 1);
      }
      label = tuple_label(members, '{', '}');
    }
    elements[s] = {static_cast<ElementId>(s), static_cast<Rank>(std::popcount(s)), std::move(label)};
    for (unsigned i = 0; i < n; ++i) {
      if (!(s >> i & 1U)) covers.push_back({static_cast<ElementId>(s), static_cast<ElementId>(s | (std::size_t{1} << i))});
    }
  }
  return build_poset("boolean:" + std::to_string(n), std::move(elements), std::move(covers));
}

// ---------------------------------------------------------------- star powers

RankedPoset gen_star_power(unsigned k, unsigned n) {
  if (k < 1 || n < 1) throw Error(ErrorCode::InvalidInput, "star power needs k >= 1 and n >= 1");
  require_size("star power", std::pow(static_cast<long double>(k + 1), n));
  const TupleSpace space(std::vector<unsigned>(n, k + 1));
  const bool labelled = space.count <= kLabelLimit;
  std::vector<ElementSpec> elements(space.count);
  std::vector<CoverEdge> covers;
  for (std::size_t id = 0; id < space.count; ++id) {
    auto c = space.decode(id);
    const auto nonzero = static_cast<Rank>(std::count_if(c.begin(), c.end(), [](unsigned x) { return x != 0; }));
    elements[id] = {static_cast<ElementId>(id), nonzero, labelled ? tuple_label(c) : std::string{}};
    for (unsigned i = 0; i < n; ++i) {
      if (c[i] != 0) continue;
      for (unsigned v = 1; v <= k; ++v) {
        c[i] = v;
        covers.push_back({static_cast<ElementId>(id), static_cast<ElementId>(space.encode(c))});
      }
      c[i] = 0;
    }
  }
  return build_poset("star:" + std::to_string(k) + "," + std::to_string(n), std::move(elements),
                     std::move(covers));
}

// ---------------------------------------------------------------- chain products

bool chain_product_condition(std::span<const unsigned> sizes) {
  if (sizes.empty()) return false;
  const unsigned long long rest =
      std::accumulate(sizes.begin() + 1, sizes.end(), 0ULL);
  return rest >= sizes.front();
}

RankedPoset gen_chain_product(std::vector<unsigned> sizes) {
  if (sizes.empty()) throw Error(ErrorCode::InvalidInput, "chain product needs at least one chain");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw Error(ErrorCode::InvalidInput, "chain sizes must be positive");
    if (i > 0 && sizes[i] > sizes[i - 1]) {
      throw Error(ErrorCode::InvalidInput, "chain sizes must be listed non-increasing");
    }
  }
  long double total = 1;
  for (unsigned k : sizes) total *= k;
  require_size("chain product", total);

  const TupleSpace space(sizes);
  const bool labelled = space.count <= kLabelLimit;
  std::vector<ElementSpec> elements(space.count);
  std::vector<CoverEdge> covers;
  for (std::size_t id = 0; id < space.count; ++id) {
    auto c = space.decode(id);
    const auto rank = static_cast<Rank>(std::accumulate(c.begin(), c.end(), 0U));
    elements[id] = {static_cast<ElementId>(id), rank, labelled ? tuple_label(c) : std::string{}};
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] + 1 >= sizes[i]) continue;
      ++c[i];
      covers.push_back({static_cast<ElementId>(id), static_cast<ElementId>(space.encode(c))});
      --c[i];
    }
  }
  std::string name = "chains:";
  for (std::size_t i = 0; i < sizes.size(); ++i) name += (i ? "," : "") + std::to_string(sizes[i]);
  return build_poset(std::move(name), std::move(elements), std::move(covers));
}

// ---------------------------------------------------------------- divisor lattice

RankedPoset gen_divisor_lattice(std::uint64_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidInput, "divisor lattice needs m >= 1");
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (rest > 1) factors.emplace_back(rest, 1);

  std::vector<unsigned> radix;
  long double total = 1;
  for (const auto& [p, e] : factors) {
    radix.push_back(e + 1);
    total *= e + 1;
  }
  require_size("divisor lattice", total);
  const TupleSpace space(radix);
  std::vector<ElementSpec> elements(space.count);
  std::vector<CoverEdge> covers;
  for (std::size_t id = 0; id < space.count; ++id) {
    auto c = space.decode(id);
    std::uint64_t d = 1;
    Rank rank = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (unsigned j = 0; j < c[i]; ++j) d *= factors[i].first;
      rank += c[i];
    }
    elements[id] = {static_cast<ElementId>(id), rank, std::to_string(d)};
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] + 1 >= radix[i]) continue;
      ++c[i];
      covers.push_back({static_cast<ElementId>(id), static_cast<ElementId>(space.encode(c))});
      --c[i];
    }
  }
  return build_poset("divisor:" + std::to_string(m), std::move(elements), std::move(covers));
}

// ---------------------------------------------------------------- subspaces

namespace {

using detail::GaloisField;
using detail::Vec;

struct Subspace {
  std::vector<Vec> rows;  // reduced row-echelon basis
  std::vector<unsigned> pivots;
};

// Number of echelon bases, summed over pivot patterns: the element count of
// the subspace lattice, obtained without building it.
long double count_subspaces(unsigned n, unsigned q) {
  long double total = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    long double free_entries = 0;
    unsigned pivots_before = 0;
    for (unsigned col = 0; col < n; ++col) {
      if (mask >> col & 1U) {
        ++pivots_before;
      } else {
        free_entries += pivots_before;  // rows whose pivot lies left of col
      }
    }
    total += std::pow(static_cast<long double>(q), free_entries);
  }
  return total;
}

long double count_affine(unsigned n, unsigned q) {
  long double total = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    long double free_entries = 0;
    unsigned pivots_before = 0;
    for (unsigned col = 0; col < n; ++col) {
      if (mask >> col & 1U) {
        ++pivots_before;
      } else {
        free_entries += pivots_before + 1;  // plus the translation coordinate
      }
    }
    total += std::pow(static_cast<long double>(q), free_entries);
  }
  return total;
}

std::vector<Subspace> enumerate_subspaces(const GaloisField& F, unsigned n) {
  const unsigned q = F.order();
  std::vector<Subspace> out;
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      if (static_cast<unsigned>(std::popcount(mask)) != k) continue;
      std::vector<unsigned> pivots;
      for (unsigned col = 0; col < n; ++col) {
        if (mask >> col & 1U) pivots.push_back(col);
      }
      // Free positions: row i, non-pivot column right of pivot i.
      std::vector<std::pair<unsigned, unsigned>> free_pos;
      for (unsigned i = 0; i < k; ++i) {
        for (unsigned col = pivots[i] + 1; col < n; ++col) {
          if (!(mask >> col & 1U)) free_pos.emplace_back(i, col);
        }
      }
      std::vector<unsigned> values(free_pos.size(), 0);
      while (true) {
        Subspace s;
        s.pivots = pivots;
        s.rows.assign(k, Vec(n, 0));
        for (unsigned i = 0; i < k; ++i) s.rows[i][pivots[i]] = 1;
        for (std::size_t f = 0; f < free_pos.size(); ++f) {
          s.rows[free_pos[f].first][free_pos[f].second] = static_cast<std::uint8_t>(values[f]);
        }
        out.push_back(std::move(s));
        std::size_t f = 0;
        while (f < values.size() && ++values[f] == q) values[f++] = 0;
        if (f == values.size()) break;
      }
    }
  }
  return out;
}

std::vector<std::uint8_t> flatten(const std::vector<Vec>& rows) {
  std::vector<std::uint8_t> key;
  for (const auto& r : rows) key.insert(key.end(), r.begin(), r.end());
  return key;
}

std::string subspace_label(const std::vector<Vec>& rows) {
  std::string s = "<";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s.push_back(',');
    s += join_digits(rows[i]);
  }
  s.push_back('>');
  return s;
}

// Nonzero vectors vanishing on `pivots` whose first nonzero entry is 1: one
// representative for each subspace covering the span of the echelon rows.
std::vector<Vec> complement_directions(const GaloisField& F, unsigned n, const std::vector<unsigned>& pivots) {
  std::vector<unsigned> free_cols;
  for (unsigned col = 0; col < n; ++col) {
    if (std::find(pivots.begin(), pivots.end(), col) == pivots.end()) free_cols.push_back(col);
  }
  std::vector<Vec> out;
  const unsigned q = F.order();
  std::vector<unsigned> values(free_cols.size(), 0);
  while (true) {
    std::size_t f = 0;
    while (f < values.size() && ++values[f] == q) values[f++] = 0;
    if (f == values.size()) break;
    auto first = std::find_if(values.begin(), values.end(), [](unsigned v) { return v != 0; });
    if (*first != 1) continue;
    Vec v(n, 0);
    for (std::size_t i = 0; i < free_cols.size(); ++i) v[free_cols[i]] = static_cast<std::uint8_t>(values[i]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

RankedPoset gen_subspace_lattice(unsigned n, unsigned q) {
  const GaloisField F(q);
  if (n > 16) throw Error(ErrorCode::SizeLimit, "subspace lattice dimension too large");
  require_size("subspace lattice", count_subspaces(n, q));
  const auto spaces = enumerate_subspaces(F, n);

  std::map<std::vector<std::uint8_t>, ElementId> index;
  std::vector<ElementSpec> elements;
  for (ElementId id = 0; id < spaces.size(); ++id) {
    index.emplace(flatten(spaces[id].rows), id);
    elements.push_back({id, static_cast<Rank>(spaces[id].rows.size()), subspace_label(spaces[id].rows)});
  }
  std::vector<CoverEdge> covers;
  for (ElementId id = 0; id < spaces.size(); ++id) {
    const Subspace& U = spaces[id];
    if (U.rows.size() == n) continue;
    for (auto& dir : complement_directions(F, n, U.pivots)) {
      std::vector<Vec> rows = U.rows;
      rows.push_back(std::move(dir));
      detail::rref(F, rows);
      covers.push_back({id, index.at(flatten(rows))});
    }
  }
  return build_poset("subspace:" + std::to_string(n) + "," + std::to_string(q), std::move(elements),
                     std::move(covers));
}

RankedPoset gen_affine_poset(unsigned n, unsigned q) {
  const GaloisField F(q);
  if (n < 1) throw Error(ErrorCode::InvalidInput, "affine poset needs n >= 1");
  if (n > 16) throw Error(ErrorCode::SizeLimit, "affine poset dimension too large");
  require_size("affine poset", count_affine(n, q));
  const auto spaces = enumerate_subspaces(F, n);

  struct Flat {
    std::size_t space;
    Vec offset;  // reduced modulo the direction space
  };
  std::vector<Flat> flats;
  std::map<std::pair<std::vector<std::uint8_t>, Vec>, ElementId> index;
  for (std::size_t s = 0; s < spaces.size(); ++s) {
    const auto& U = spaces[s];
    std::vector<unsigned> free_cols;
    for (unsigned col = 0; col < n; ++col) {
      if (std::find(U.pivots.begin(), U.pivots.end(), col) == U.pivots.end()) free_cols.push_back(col);
    }
    std::vector<unsigned> values(free_cols.size(), 0);
    while (true) {
      Vec v(n, 0);
      for (std::size_t i = 0; i < free_cols.size(); ++i) v[free_cols[i]] = static_cast<std::uint8_t>(values[i]);
      index.emplace(std::make_pair(flatten(U.rows), v), static_cast<ElementId>(flats.size()));
      flats.push_back({s, std::move(v)});
      std::size_t f = 0;
      while (f < values.size() && ++values[f] == q) values[f++] = 0;
      if (f == values.size()) break;
    }
  }

  std::vector<ElementSpec> elements;
  for (ElementId id = 0; id < flats.size(); ++id) {
    const auto& U = spaces[flats[id].space];
    elements.push_back({id, static_cast<Rank>(U.rows.size()),
                        join_digits(flats[id].offset) + "+" + subspace_label(U.rows)});
  }
  std::vector<CoverEdge> covers;
  for (ElementId id = 0; id < flats.size(); ++id) {
    const auto& U = spaces[flats[id].space];
    if (U.rows.size() == n) continue;
    for (auto& dir : complement_directions(F, n, U.pivots)) {
      std::vector<Vec> rows = U.rows;
      rows.push_back(std::move(dir));
      const auto pivots = detail::rref(F, rows);
      Vec v = flats[id].offset;
      detail::reduce_mod(F, rows, pivots, v);
      covers.push_back({id, index.at(std::make_pair(flatten(rows), v))});
    }
  }
  return build_poset("affine:" + std::to_string(n) + "," + std::to_string(q), std::move(elements),
                     std::move(covers));
}

// ---------------------------------------------------------------- derived posets

RankedPoset truncate(const RankedPoset& P, Rank l, Rank m) {
  if (!(l < m && m <= P.max_rank())) {
    throw Error(ErrorCode::RankOutOfRange, "truncation needs 0 <= l < m <= " + std::to_string(P.max_rank()));
  }
  std::vector<ElementId> renumber(P.size(), 0);
  std::vector<ElementSpec> elements;
  ElementId next = 0;
  for (ElementId a = 0; a < P.size(); ++a) {
    if (P.rank(a) < l || P.rank(a) > m) continue;
    renumber[a] = next;
    elements.push_back({next, P.rank(a) - l, P.has_labels() ? P.label(a) : std::string{}});
    ++next;
  }
  std::vector<CoverEdge> covers;
  for (const auto& c : P.covers()) {
    if (P.rank(c.lo) >= l && P.rank(c.hi) <= m) covers.push_back({renumber[c.lo], renumber[c.hi]});
  }
  return build_poset("trunc(" + P.name() + "," + std::to_string(l) + "," + std::to_string(m) + ")",
                     std::move(elements), std::move(covers));
}

RankedPoset product(const RankedPoset& P, const RankedPoset& Q) {
  require_size("product", static_cast<long double>(P.size()) * Q.size());
  const auto nq = static_cast<ElementId>(Q.size());
  const bool labelled = (P.has_labels() || Q.has_labels()) && P.size() * Q.size() <= kLabelLimit;
  std::vector<ElementSpec> elements;
  elements.reserve(P.size() * Q.size());
  for (ElementId x = 0; x < P.size(); ++x) {
    for (ElementId y = 0; y < Q.size(); ++y) {
      elements.push_back({x * nq + y, P.rank(x) + Q.rank(y),
                          labelled ? "(" + P.label(x) + "," + Q.label(y) + ")" : std::string{}});
    }
  }
  std::vector<CoverEdge> covers;
  for (const auto& c : P.covers()) {
    for (ElementId y = 0; y < Q.size(); ++y) covers.push_back({c.lo * nq + y, c.hi * nq + y});
  }
  for (const auto& c : Q.covers()) {
    for (ElementId x = 0; x < P.size(); ++x) covers.push_back({x * nq + c.lo, x * nq + c.hi});
  }
  return build_poset("prod(" + P.name() + "," + Q.name() + ")", std::move(elements), std::move(covers));
}

namespace {

RankedPoset six_element(std::string name, bool with_cross_edge) {
  // ids: z=0, p=1, c=2, a=3, b=4, t=5
  std::vector<ElementSpec> elements{{0, 0, "z"}, {1, 1, "p"}, {2, 1, "c"},
                                    {3, 2, "a"}, {4, 2, "b"}, {5, 3, "t"}};
  std::vector<CoverEdge> covers{{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}};
  if (with_cross_edge) covers.push_back({1, 4});
  return build_poset(std::move(name), std::move(elements), std::move(covers));
}

}  // namespace

RankedPoset gen_fig1a() { return six_element("fig1a", true); }
RankedPoset gen_fig1b() { return six_element("fig1b", false); }

// ---------------------------------------------------------------- spec strings

std::string FamilySpec::to_string() const {
  auto list = [](const std::vector<std::uint64_t>& v, std::size_t from = 0) {
    std::string s;
    for (std::size_t i = from; i < v.size(); ++i) s += (i > from ? "," : "") + std::to_string(v[i]);
    return s;
  };
  switch (kind) {
    case Kind::Boolean: return "boolean:" + list(params);
    case Kind::StarPower: return "star:" + list(params);
    case Kind::ChainProduct: return "chains:" + list(params);
    case Kind::DivisorLattice: return "divisor:" + list(params);
    case Kind::SubspaceLattice: return "subspace:" + list(params);
    case Kind::AffinePoset: return "affine:" + list(params);
    case Kind::Truncated: return "trunc(" + children.at(0).to_string() + "," + list(params) + ")";
    case Kind::Fig1a: return "fig1a";
    case Kind::Fig1b: return "fig1b";
    case Kind::ProductOf: return "prod(" + children.at(0).to_string() + "," + children.at(1).to_string() + ")";
  }
  return {};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad_spec(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::InvalidInput, "bad poset spec '" + std::string(text) + "': " + std::string(why));
}

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (s.empty()) bad_spec(whole, "missing number");
  std::uint64_t v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) bad_spec(whole, "expected a number, got '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    if (v > (std::uint64_t{1} << 40)) bad_spec(whole, "number too large");
  }
  return v;
}

// Comma positions at parenthesis depth zero.
std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

bool starts_with_letter(std::string_view s) {
  s = trim(s);
  return !s.empty() && std::isalpha(static_cast<unsigned char>(s.front()));
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  const std::string_view s = trim(text);
  using Kind = FamilySpec::Kind;
  FamilySpec spec;

  auto call_args = [&](std::string_view head) -> std::string_view {
    if (s.size() < head.size() + 2 || s.back() != ')') bad_spec(text, "unbalanced parentheses");
    return s.substr(head.size() + 1, s.size() - head.size() - 2);
  };

  if (s == "fig1a") return FamilySpec{Kind::Fig1a, {}, {}};
  if (s == "fig1b") return FamilySpec{Kind::Fig1b, {}, {}};

  if (s.starts_with("trunc(")) {
    auto parts = split_top(call_args("trunc"));
    if (parts.size() < 3) bad_spec(text, "trunc needs (spec,l,m)");
    const auto m = parse_uint(parts.back(), text);
    const auto l = parse_uint(parts[parts.size() - 2], text);
    std::string inner;
    for (std::size_t i = 0; i + 2 < parts.size(); ++i) inner += (i ? "," : "") + std::string(parts[i]);
    spec.kind = Kind::Truncated;
    spec.children.push_back(parse_family_spec(inner));
    spec.params = {l, m};
    return spec;
  }
  if (s.starts_with("prod(")) {
    auto parts = split_top(call_args("prod"));
    // The second factor starts at the first later part beginning with a letter.
    std::size_t cut = 0;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      if (starts_with_letter(parts[i])) {
        cut = i;
        break;
      }
    }
    if (cut == 0) bad_spec(text, "prod needs two factor specs");
    std::string left, right;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::string& dst = i < cut ? left : right;
      if (!dst.empty()) dst.push_back(',');
      dst += std::string(parts[i]);
    }
    spec.kind = Kind::ProductOf;
    spec.children.push_back(parse_family_spec(left));
    spec.children.push_back(parse_family_spec(right));
    return spec;
  }

  const auto colon = s.find(':');
  if (colon == std::string_view::npos) bad_spec(text, "unknown family");
  const std::string_view head = s.substr(0, colon);
  for (auto part : split_top(s.substr(colon + 1))) spec.params.push_back(parse_uint(part, text));

  auto expect = [&](std::size_t count) {
    if (spec.params.size() != count) bad_spec(text, "expected " + std::to_string(count) + " parameter(s)");
  };
  if (head == "boolean") {
    spec.kind = Kind::Boolean;
    expect(1);
  } else if (head == "star") {
    spec.kind = Kind::StarPower;
    expect(2);
  } else if (head == "chains" || head == "chain") {
    spec.kind = Kind::ChainProduct;
    if (spec.params.empty()) bad_spec(text, "expected chain sizes");
  } else if (head == "divisor") {
    spec.kind = Kind::DivisorLattice;
    expect(1);
  } else if (head == "subspace") {
    spec.kind = Kind::SubspaceLattice;
    expect(2);
  } else if (head == "affine") {
    spec.kind = Kind::AffinePoset;
    expect(2);
  } else {
    bad_spec(text, "unknown family '" + std::string(head) + "'");
  }
  return spec;
}

RankedPoset generate(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  auto u = [&](std::size_t i) { return static_cast<unsigned>(spec.params.at(i)); };
  switch (spec.kind) {
    case Kind::Boolean: return gen_boolean(u(0));
    case Kind::StarPower: return gen_star_power(u(0), u(1));
    case Kind::ChainProduct: {
      std::vector<unsigned> sizes;
      for (auto p : spec.params) sizes.push_back(static_cast<unsigned>(p));
      return gen_chain_product(std::move(sizes));
    }
    case Kind::DivisorLattice: return gen_divisor_lattice(spec.params.at(0));
    case Kind::SubspaceLattice: return gen_subspace_lattice(u(0), u(1));
    case Kind::AffinePoset: return gen_affine_poset(u(0), u(1));
    case Kind::Truncated: return truncate(generate(spec.children.at(0)), u(0), u(1));
    case Kind::Fig1a: return gen_fig1a();
    case Kind::Fig1b: return gen_fig1b();
    case Kind::ProductOf: return product(generate(spec.children.at(0)), generate(spec.children.at(1)));
  }
  throw Error(ErrorCode::InvalidInput, "unknown family kind");
}

RankedPoset generate(std::string_view spec) { return generate(parse_family_spec(spec)); }

}  // namespace azposet
