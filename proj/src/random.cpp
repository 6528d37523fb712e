#include "azposet/random.hpp"

#include <numeric>
#include <utility>

namespace azposet {

std::vector<ElementId> sample_distinct(std::span<const ElementId> pool, std::size_t count, std::mt19937_64& rng) {
  if (count > pool.size()) {
    throw Error(ErrorCode::InvalidInput, "cannot sample " + std::to_string(count) + " of " +
                                             std::to_string(pool.size()) + " elements");
  }
  std::vector<ElementId> items(pool.begin(), pool.end());
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (items.size() - i));
    std::swap(items[i], items[j]);
  }
  items.resize(count);
  return items;
}

Family random_family(const RankedPoset& P, std::size_t size, std::uint64_t seed) {
  std::vector<ElementId> ids(P.size());
  std::iota(ids.begin(), ids.end(), ElementId{0});
  std::mt19937_64 rng(seed);
  return Family(sample_distinct(ids, size, rng));
}

}  // namespace azposet
