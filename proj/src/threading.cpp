#include "radapt/threading.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace radapt {

int thread_count() {
  static const int n = [] {
    const char* env = std::getenv("RADAPT_THREADS");
    int t = 1;
    if (env) t = std::atoi(env);
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    return std::clamp(t, 1, std::max(1, hw));
  }();
  return n;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = w * chunk, hi = std::min(n, lo + chunk);
    pool.emplace_back([&, lo, hi] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace radapt
