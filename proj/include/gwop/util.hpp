#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gwop {

// Thrown on malformed input data or violated preconditions.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Outcome of a property check: either ok, or a witness of the failure.
struct Report {
  bool ok = true;
  std::string witness;

  static Report pass() { return {true, ""}; }
  static Report fail(std::string w) { return {false, std::move(w)}; }
};

// Thread budget from the GW_THREADS environment variable (>= 1, default 1).
int thread_budget();

// Apply fn to every index in [0, count), collecting results in index order.
// Work is split over thread_budget() threads; output is identical to a
// serial run because chunks are concatenated in order.
template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  int budget = thread_budget();
  if (budget <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::size_t nthreads = std::min<std::size_t>(budget, count);
  std::vector<std::thread> workers;
  std::size_t chunk = (count + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
    });
  }
  for (auto& w : workers) w.join();
  return out;
}

}  // namespace gwop
