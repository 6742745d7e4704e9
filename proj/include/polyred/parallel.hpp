#pragma once

// Deterministic parallel map over row indices.
//
// Work is split into contiguous chunks handed out through one atomic
// counter; results land in preallocated slots keyed by position, so the
// merged output is identical for any worker count. The first failing key (in
// key order, not completion order) wins error reporting, and a failure stops
// workers from claiming further chunks.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace polyred {

inline int default_worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

struct TaskError : std::runtime_error {
  int key;
  TaskError(int key_, std::string const& what_) : std::runtime_error(what_), key(key_) {}
};

struct TaskBatch {
  std::vector<int> items;
  int width = 0;      // <= 0: machine logical core count
  int chunking = 0; // <= 0: choose automatically
};

template <class F>
auto map_rows(TaskBatch const& batch, F&& f)
    -> std::vector<std::pair<int, decltype(f(0))>> {
  using R = decltype(f(0));
  std::size_t const n = batch.items.size();
  std::vector<std::pair<int, R>> out;
  if (n == 0) return out;

  int width = batch.width > 0 ? batch.width : default_worker_count();
  std::size_t chunk = batch.chunking > 0
                          ? static_cast<std::size_t>(batch.chunking)
                          : std::max<std::size_t>(1, n / (static_cast<std::size_t>(width) * 4));

  std::vector<std::optional<R>> slots(n);
  std::vector<std::pair<std::size_t, std::exception_ptr>> failures;
  std::mutex failure_mutex;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> cancelled{false};

  auto run = [&]() {
    for (;;) {
      if (cancelled.load(std::memory_order_relaxed)) return;
      std::size_t lo = next.fetch_add(chunk, std::memory_order_relaxed);
      if (lo >= n) return;
      std::size_t hi = std::min(n, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) {
        try {
          slots[i] = f(batch.items[i]);
        } catch (...) {
          {
            std::lock_guard<std::mutex> lock(failure_mutex);
            failures.emplace_back(i, std::current_exception());
          }
          cancelled.store(true, std::memory_order_relaxed);
          return;
        }
      }
    }
  };

  int threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(width), (n + chunk - 1) / chunk));
  if (threads <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }

  if (!failures.empty()) {
    auto first = std::min_element(failures.begin(), failures.end(),
                                  [](auto const& l, auto const& r) { return l.first < r.first; });
    int key = batch.items[first->first];
    try {
      std::rethrow_exception(first->second);
    } catch (std::exception const& e) {
      throw TaskError(key, "task for key " + std::to_string(key) + " failed: " + e.what());
    } catch (...) {
      throw TaskError(key, "task for key " + std::to_string(key) + " failed");
    }
  }

  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(batch.items[i], std::move(*slots[i]));
  return out;
}

}  // namespace polyred
