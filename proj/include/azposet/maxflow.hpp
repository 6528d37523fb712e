#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace azposet {

/// Dinic's algorithm on integer capacities.
class MaxFlow {
 public:
  using Capacity = std::int64_t;
  static constexpr Capacity kInfinite = std::numeric_limits<Capacity>::max() / 4;

  explicit MaxFlow(std::size_t nodes);

  /// Returns the edge handle used by flow_on().
  std::size_t add_edge(std::size_t from, std::size_t to, Capacity capacity);

  Capacity run(std::size_t source, std::size_t sink);

  Capacity flow_on(std::size_t edge) const;

  /// After run(): nodes reachable from the source in the residual graph.
  std::vector<char> source_side() const;

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    Capacity cap;
    Capacity original;
  };

  bool build_levels(std::size_t source, std::size_t sink);
  Capacity push(std::size_t v, std::size_t sink, Capacity limit);

  std::vector<std::vector<Arc>> graph_;
  std::vector<std::pair<std::size_t, std::size_t>> handles_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  std::size_t source_ = 0;
};

}  // namespace azposet
