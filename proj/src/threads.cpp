#include "gdmcf/threads.hpp"

#include <cstdlib>
#include <thread>
#include <vector>

namespace gdmcf {

int thread_budget() {
  static int budget = [] {
    const char* env = std::getenv("GDMCF_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    if (v < 1) v = 1;
    if (v > 64) v = 64;
    return v;
  }();
  return budget;
}

void parallel_rows(int n, const std::function<void(int, int)>& fn) {
  int workers = thread_budget();
  if (workers <= 1 || n < 2 * workers) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    int begin = w * chunk;
    int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(fn, begin, end);
  }
  for (auto& t : pool) t.join();
}

}  // namespace gdmcf
