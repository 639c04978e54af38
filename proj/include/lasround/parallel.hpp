#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace lasround {

// Runs fn(0..count-1), each call independent, on up to `threads` workers.
// Results land in index order, so output is identical for any thread count.
template <typename T>
std::vector<T> parallel_map(int count, int threads, const std::function<T(int)>& fn) {
  std::vector<T> out(static_cast<std::size_t>(count));
  if (count == 0) return out;
  if (threads < 1) threads = 1;
  if (threads == 1 || count == 1) {
    for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  const int workers = std::min(threads, count);
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          out[static_cast<std::size_t>(i)] = fn(i);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace lasround
