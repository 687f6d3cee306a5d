#include "nsfpen/parallel.hpp"

namespace nsfpen {

namespace {

// Chunk [0,count) into `parts` contiguous ranges; part p is [begin,end).
inline void chunk_range(int count, int parts, int p, int& begin, int& end) {
  const int base = count / parts;
  const int rem = count % parts;
  begin = p * base + (p < rem ? p : rem);
  end = begin + base + (p < rem ? 1 : 0);
}

} // namespace

ThreadPool::ThreadPool(int workers) {
  if (workers < 1) workers = 1;
  threads_.reserve(static_cast<std::size_t>(workers - 1));
  for (int s = 1; s < workers; ++s) {
    threads_.emplace_back([this, s] { worker_loop(s); });
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard<std::mutex> lk(mu_);
    stop_ = true;
  }
  start_cv_.notify_all();
  for (auto& t : threads_) t.join();
}

void ThreadPool::parallel_for(int count, const std::function<void(int, int)>& fn) {
  const int parts = workers();
  if (parts == 1 || count < parts) {
    if (count > 0) fn(0, count);
    return;
  }
  {
    std::lock_guard<std::mutex> lk(mu_);
    job_ = &fn;
    job_count_ = count;
    pending_ = parts - 1;
    ++generation_;
  }
  start_cv_.notify_all();

  int begin, end;
  chunk_range(count, parts, 0, begin, end);
  fn(begin, end);

  std::unique_lock<std::mutex> lk(mu_);
  done_cv_.wait(lk, [this] { return pending_ == 0; });
  job_ = nullptr;
}

void ThreadPool::worker_loop(int slot) {
  long seen = 0;
  for (;;) {
    const std::function<void(int, int)>* job;
    int count;
    {
      std::unique_lock<std::mutex> lk(mu_);
      start_cv_.wait(lk, [&] { return stop_ || generation_ != seen; });
      if (stop_) return;
      seen = generation_;
      job = job_;
      count = job_count_;
    }
    int begin, end;
    chunk_range(count, workers(), slot, begin, end);
    if (begin < end) (*job)(begin, end);
    {
      std::lock_guard<std::mutex> lk(mu_);
      --pending_;
    }
    done_cv_.notify_one();
  }
}

} // namespace nsfpen
