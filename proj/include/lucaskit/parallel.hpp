#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace lucaskit {

/// Worker cap: LUCASKIT_THREADS if set to a positive integer, else the
/// hardware concurrency.
inline unsigned thread_limit() {
  if (const char* env = std::getenv("LUCASKIT_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Applies fn to every item; results keep the input order whatever the
/// scheduling. The first exception thrown by a worker is rethrown.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  const unsigned workers = std::min<std::size_t>(thread_limit(), std::max<std::size_t>(items.size(), 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < items.size(); i += workers) out[i] = fn(items[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace lucaskit
