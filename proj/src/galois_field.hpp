#pragma once

#include <cstdint>
#include <vector>

namespace azposet::detail {

/// Arithmetic in GF(q) for prime powers q <= 9. Elements are 0..q-1, read as
/// base-p digit vectors of polynomial coefficients when q is not prime.
class GaloisField {
 public:
  explicit GaloisField(unsigned q);

  unsigned order() const { return q_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + neg_[b]]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
  std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }

 private:
  unsigned q_ = 0;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

using Vec = std::vector<std::uint8_t>;

/// Row-reduces `rows` in place to reduced row-echelon form and drops zero
/// rows. Returns the pivot column of every remaining row.
std::vector<unsigned> rref(const GaloisField& F, std::vector<Vec>& rows);

/// Subtracts multiples of the echelon rows so that v vanishes on every pivot
/// column. The result is the canonical representative of v modulo the span.
void reduce_mod(const GaloisField& F, const std::vector<Vec>& rows,
                const std::vector<unsigned>& pivots, Vec& v);

}  // namespace azposet::detail
