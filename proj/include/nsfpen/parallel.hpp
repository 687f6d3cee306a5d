#pragma once

#include <condition_variable>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace nsfpen {

/// Persistent worker pool for row-partitioned cell loops. Every output cell
/// is written by exactly one worker and no reductions happen in parallel
/// regions, so results are bit-identical for any worker count.
class ThreadPool {
 public:
  explicit ThreadPool(int workers);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  int workers() const { return static_cast<int>(threads_.size()) + 1; }

  /// Runs fn(begin, end) over a partition of [0, count) and blocks until all
  /// chunks are done. With a single worker the call runs inline.
  void parallel_for(int count, const std::function<void(int, int)>& fn);

 private:
  void worker_loop(int slot);

  std::vector<std::thread> threads_;
  std::mutex mu_;
  std::condition_variable start_cv_;
  std::condition_variable done_cv_;
  const std::function<void(int, int)>* job_ = nullptr;
  int job_count_ = 0;
  long generation_ = 0;
  int pending_ = 0;
  bool stop_ = false;
};

} // namespace nsfpen
