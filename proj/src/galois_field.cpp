#include "galois_field.hpp"

#include <string>

#include "azposet/error.hpp"

namespace azposet::detail {

namespace {

struct FieldShape {
  unsigned p;
  unsigned m;
  std::vector<unsigned> modulus;  // monic irreducible, low degree first
};

FieldShape shape_of(unsigned q) {
  switch (q) {
    case 2: case 3: case 5: case 7: return {q, 1, {}};
    case 4: return {2, 2, {1, 1, 1}};     // x^2 + x + 1
    case 8: return {2, 3, {1, 1, 0, 1}};  // x^3 + x + 1
    case 9: return {3, 2, {1, 0, 1}};     // x^2 + 1
    default: break;
  }
  if (q > 9) {
    throw Error(ErrorCode::InvalidInput, "field order " + std::to_string(q) + " exceeds 9");
  }
  throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
}

std::vector<unsigned> digits(unsigned value, unsigned p, unsigned m) {
  std::vector<unsigned> d(m);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = value % p;
    value /= p;
  }
  return d;
}

unsigned undigits(const std::vector<unsigned>& d, unsigned p) {
  unsigned value = 0;
  for (std::size_t i = d.size(); i-- > 0;) value = value * p + d[i];
  return value;
}

}  // namespace

GaloisField::GaloisField(unsigned q) : q_(q) {
  const FieldShape s = shape_of(q);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const auto da = digits(a, s.p, s.m);
    for (unsigned b = 0; b < q; ++b) {
      const auto db = digits(b, s.p, s.m);
      std::vector<unsigned> sum(s.m);
      for (unsigned i = 0; i < s.m; ++i) sum[i] = (da[i] + db[i]) % s.p;
      add_[a * q + b] = static_cast<std::uint8_t>(undigits(sum, s.p));

      std::vector<unsigned> prod(2 * s.m, 0);
      for (unsigned i = 0; i < s.m; ++i) {
        for (unsigned j = 0; j < s.m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % s.p;
      }
      if (s.m > 1) {
        for (unsigned deg = 2 * s.m - 1; deg >= s.m; --deg) {
          const unsigned c = prod[deg];
          if (c == 0) continue;
          for (unsigned i = 0; i <= s.m; ++i) {
            prod[deg - s.m + i] = (prod[deg - s.m + i] + s.p * s.p - c * s.modulus[i] % s.p) % s.p;
          }
        }
      }
      prod.resize(s.m);
      mul_[a * q + b] = static_cast<std::uint8_t>(undigits(prod, s.p));
    }
  }
  for (unsigned a = 0; a < q; ++a) {
    for (unsigned b = 0; b < q; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<std::uint8_t>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
}

std::vector<unsigned> rref(const GaloisField& F, std::vector<Vec>& rows) {
  std::vector<unsigned> pivots;
  if (rows.empty()) return pivots;
  const unsigned n = static_cast<unsigned>(rows.front().size());
  std::size_t next = 0;
  for (unsigned col = 0; col < n && next < rows.size(); ++col) {
    std::size_t sel = next;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[next], rows[sel]);
    const std::uint8_t scale = F.inv(rows[next][col]);
    for (auto& x : rows[next]) x = F.mul(x, scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col] == 0) continue;
      const std::uint8_t factor = rows[r][col];
      for (unsigned j = 0; j < n; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(factor, rows[next][j]));
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

void reduce_mod(const GaloisField& F, const std::vector<Vec>& rows,
                const std::vector<unsigned>& pivots, Vec& v) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::uint8_t factor = v[pivots[i]];
    if (factor == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(factor, rows[i][j]));
  }
}

}  // namespace azposet::detail
