#ifndef QG_PARALLEL_HPP
#define QG_PARALLEL_HPP

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace qg {

/// jobs <= 0 means "auto": hardware concurrency, at least 1.
inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

/// Runs body(worker_index) on `jobs` threads (inline when jobs == 1) and
/// rethrows the first worker exception after all have joined.
template <class F>
void run_workers(int jobs, F&& body) {
  if (jobs <= 1) {
    body(0);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  pool.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace qg

#endif  // QG_PARALLEL_HPP
