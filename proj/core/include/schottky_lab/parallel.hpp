#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

namespace schottky_lab {

// Hardware concurrency, capped by SCHOTTKY_LAB_THREADS when set to a positive integer.
std::size_t worker_count();

// Runs task(i) for i in [0, n) on up to worker_count() threads. Tasks are
// claimed from a shared counter; the first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task);

// Results in index order regardless of completion order.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<std::optional<T>> slots(n);
  parallel_for(n, [&](std::size_t i) { slots[i].emplace(fn(i)); });
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace schottky_lab
