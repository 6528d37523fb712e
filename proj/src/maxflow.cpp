#include "azposet/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace azposet {

MaxFlow::MaxFlow(std::size_t nodes) : graph_(nodes), level_(nodes), cursor_(nodes) {}

std::size_t MaxFlow::add_edge(std::size_t from, std::size_t to, Capacity capacity) {
  graph_[from].push_back({to, graph_[to].size(), capacity, capacity});
  graph_[to].push_back({from, graph_[from].size() - 1, 0, 0});
  handles_.emplace_back(from, graph_[from].size() - 1);
  return handles_.size() - 1;
}

bool MaxFlow::build_levels(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (const Arc& a : graph_[v]) {
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

MaxFlow::Capacity MaxFlow::push(std::size_t v, std::size_t sink, Capacity limit) {
  if (v == sink) return limit;
  for (std::size_t& i = cursor_[v]; i < graph_[v].size(); ++i) {
    Arc& a = graph_[v][i];
    if (a.cap <= 0 || level_[a.to] != level_[v] + 1) continue;
    const Capacity pushed = push(a.to, sink, std::min(limit, a.cap));
    if (pushed > 0) {
      a.cap -= pushed;
      graph_[a.to][a.rev].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

MaxFlow::Capacity MaxFlow::run(std::size_t source, std::size_t sink) {
  source_ = source;
  Capacity total = 0;
  while (build_levels(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (Capacity pushed = push(source, sink, kInfinite)) total += pushed;
  }
  return total;
}

MaxFlow::Capacity MaxFlow::flow_on(std::size_t edge) const {
  const auto [from, index] = handles_.at(edge);
  const Arc& a = graph_[from][index];
  return a.original - a.cap;
}

std::vector<char> MaxFlow::source_side() const {
  std::vector<char> seen(graph_.size(), 0);
  std::vector<std::size_t> stack{source_};
  seen[source_] = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const Arc& a : graph_[v]) {
      if (a.cap > 0 && !seen[a.to]) {
        seen[a.to] = 1;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

}  // namespace azposet
