#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "azposet/poset.hpp"

namespace azposet {

/// Identifier of the generator reported next to every seeded result.
inline constexpr std::string_view kRandomAlgorithm = "mt19937_64";

/// `count` distinct entries of `pool`, chosen by a partial Fisher-Yates
/// shuffle driven by `rng() % remaining`.
std::vector<ElementId> sample_distinct(std::span<const ElementId> pool, std::size_t count, std::mt19937_64& rng);

/// `size` distinct elements of P. Throws InvalidInput when size > |P|.
Family random_family(const RankedPoset& P, std::size_t size, std::uint64_t seed);

}  // namespace azposet
