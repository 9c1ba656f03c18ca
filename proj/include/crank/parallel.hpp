#pragma once

#include <cstddef>
#include <span>
#include <thread>
#include <type_traits>
#include <vector>

namespace crank {

// CRANK_THREADS wins unless set_worker_count was called.
unsigned worker_count();
void set_worker_count(unsigned n);

// f(i) for i in [0,n); results land in index order, so any later
// reduction sees the same sequence whatever the thread count.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> out(n);
  unsigned w = worker_count();
  if (w <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  if (w > n) w = static_cast<unsigned>(n);
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (unsigned t = 0; t < w; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += w) out[i] = f(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

// fixed binary tree, independent of how the values were produced
template <class T>
T pairwise_sum(std::span<const T> v) {
  if (v.empty()) return T(0);
  if (v.size() == 1) return v[0];
  std::size_t mid = v.size() / 2;
  return pairwise_sum(v.subspan(0, mid)) + pairwise_sum(v.subspan(mid));
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v.data(), v.size()));
}

}  // namespace crank
