#pragma once

// Breadth-first Cayley-ball engine over any exact group implementation.
// Canonical serializations are the dedup keys, so correctness reduces to the
// injectivity of each model's serialize().  Expansion is level-synchronous;
// with several threads each level's frontier is split into ordered chunks and
// merged back in chunk order, so the resulting ball (and every export) is
// identical to the single-threaded run.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace distort::oracle {

template <typename M>
concept GroupModel = requires(const M& m, const typename M::Element& e, std::size_t gi) {
  typename M::Element;
  { m.identity() } -> std::same_as<typename M::Element>;
  { m.generator_count() } -> std::convertible_to<std::size_t>;
  { m.generator_label(gi) } -> std::convertible_to<std::string>;
  { m.apply(e, gi) } -> std::same_as<typename M::Element>;
  { m.serialize(e) } -> std::convertible_to<std::string>;
};

struct Ball {
  int radius = 0;
  std::unordered_map<std::string, int> distances;
  std::vector<std::size_t> sphere_sizes;  // indexed by distance, 0..radius

  std::size_t size() const { return distances.size(); }
};

class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(Ball partial_ball, int done_radius, std::size_t limit)
      : std::runtime_error("element limit " + std::to_string(limit) +
                           " exceeded; ball complete through radius " +
                           std::to_string(done_radius)),
        partial(std::move(partial_ball)),
        completed_radius(done_radius) {}

  Ball partial;
  int completed_radius;
};

inline constexpr std::size_t kDefaultLimit = 50'000'000;

namespace detail {

template <GroupModel M>
std::vector<std::pair<std::string, typename M::Element>> expand_level(
    const M& model, const std::vector<typename M::Element>& frontier, unsigned threads) {
  const std::size_t gens = model.generator_count();
  std::vector<std::pair<std::string, typename M::Element>> products(frontier.size() * gens);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto& e = frontier[idx / gens];
      auto next = model.apply(e, idx % gens);
      products[idx] = {model.serialize(next), std::move(next)};
    }
  };
  if (threads <= 1 || products.size() < 1024) {
    work(0, products.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (products.size() + threads - 1) / threads;
    for (unsigned ti = 0; ti < threads; ++ti) {
      std::size_t begin = ti * chunk;
      if (begin >= products.size()) break;
      pool.emplace_back(work, begin, std::min(begin + chunk, products.size()));
    }
    for (auto& th : pool) th.join();
  }
  return products;
}

}  // namespace detail

template <GroupModel M>
Ball ball(const M& model, int radius, std::size_t limit = kDefaultLimit, unsigned threads = 1) {
  Ball b;
  b.radius = radius;
  auto id = model.identity();
  b.distances.emplace(model.serialize(id), 0);
  b.sphere_sizes.push_back(1);
  std::vector<typename M::Element> frontier{id};

  for (int d = 1; d <= radius; ++d) {
    auto products = detail::expand_level(model, frontier, threads);
    std::vector<typename M::Element> next;
    std::size_t found = 0;
    for (auto& [key, element] : products) {
      if (b.distances.size() >= limit && !b.distances.contains(key))
        throw LimitExceeded(std::move(b), d - 1, limit);
      if (b.distances.emplace(std::move(key), d).second) {
        next.push_back(std::move(element));
        ++found;
      }
    }
    b.sphere_sizes.push_back(found);
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return b;
}

// Exact distance from the identity if it is at most max_radius, else nullopt.
template <GroupModel M>
std::optional<int> distance(const M& model, const typename M::Element& target, int max_radius,
                            std::size_t limit = kDefaultLimit, unsigned threads = 1) {
  const std::string wanted = model.serialize(target);
  Ball b;
  b.radius = max_radius;
  auto id = model.identity();
  if (model.serialize(id) == wanted) return 0;
  b.distances.emplace(model.serialize(id), 0);
  std::vector<typename M::Element> frontier{id};
  for (int d = 1; d <= max_radius; ++d) {
    auto products = detail::expand_level(model, frontier, threads);
    std::vector<typename M::Element> next;
    for (auto& [key, element] : products) {
      if (key == wanted) return d;
      if (b.distances.size() >= limit && !b.distances.contains(key))
        throw LimitExceeded(std::move(b), d - 1, limit);
      if (b.distances.emplace(std::move(key), d).second) next.push_back(std::move(element));
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return std::nullopt;
}

}  // namespace distort::oracle
