#ifndef MINKHYP_PARALLEL_HPP
#define MINKHYP_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace minkhyp {

// Worker count: hardware concurrency capped by MINK_KHYP_THREADS.
inline int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("MINK_KHYP_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

// Static row partition; results must not depend on scheduling.
inline void parallel_for(long begin, long end, const std::function<void(long)>& body) {
  const long count = end - begin;
  if (count <= 0) return;
  int workers = worker_count();
  if (workers <= 1 || count < 2 * workers) {
    for (long i = begin; i < end; ++i) body(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const long chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long lo = begin + w * chunk;
    const long hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([lo, hi, &body] {
      for (long i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace minkhyp

#endif
