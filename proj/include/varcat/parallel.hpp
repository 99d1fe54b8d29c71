#ifndef VARCAT_PARALLEL_HPP
#define VARCAT_PARALLEL_HPP

#include <thread>
#include <vector>

namespace varcat {

// Process-wide worker count.  Results must never depend on it: workers own
// contiguous index ranges and their outputs are merged in range order.
inline int& thread_count() {
  static int n = 1;
  return n;
}

template <typename Item, typename Fn>
std::vector<Item> parallel_collect(size_t n, Fn&& fn) {
  int workers = thread_count();
  if (workers <= 1 || n < 64) {
    std::vector<Item> out;
    for (size_t i = 0; i < n; ++i) fn(i, out);
    return out;
  }
  size_t w = static_cast<size_t>(workers);
  if (w > n) w = n;
  std::vector<std::vector<Item>> slots(w);
  std::vector<std::thread> pool;
  size_t chunk = (n + w - 1) / w;
  for (size_t s = 0; s < w; ++s) {
    size_t lo = s * chunk, hi = std::min(n, lo + chunk);
    pool.emplace_back([&, s, lo, hi]() {
      for (size_t i = lo; i < hi; ++i) fn(i, slots[s]);
    });
  }
  for (auto& t : pool) t.join();
  std::vector<Item> out;
  for (auto& s : slots)
    for (auto& x : s) out.push_back(std::move(x));
  return out;
}

}  // namespace varcat

#endif
