#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace trisec {

// Hardware thread count clamped to [1, 64].
unsigned default_workers();

// Runs fn(i) for 0 <= i < n, split into contiguous chunks over `workers`
// threads. Callers write results into index-addressed storage and reduce
// sequentially afterwards, so output is identical for every worker count.
template <typename Fn>
void parallel_for(std::uint64_t n, unsigned workers, Fn&& fn) {
  if (workers <= 1 || n < 2 * workers) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk;
    if (lo >= n) break;
    const std::uint64_t hi = lo + chunk < n ? lo + chunk : n;
    pool.emplace_back([lo, hi, &fn] {
      for (std::uint64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

// Runs fn(slot, lo, hi) once per chunk so the callee can keep per-slot
// scratch state. Slot count equals `workers` even in the serial fallback,
// keeping any slot-indexed reduction independent of the thread count.
template <typename Fn>
void parallel_chunks(std::uint64_t n, unsigned workers, Fn&& fn) {
  const unsigned w = workers == 0 ? 1 : workers;
  const std::uint64_t chunk = (n + w - 1) / w;
  if (w == 1 || n < 2 * w) {
    for (unsigned slot = 0; slot < w; ++slot) {
      const std::uint64_t lo = slot * chunk;
      if (lo >= n) break;
      fn(slot, lo, lo + chunk < n ? lo + chunk : n);
    }
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (unsigned slot = 0; slot < w; ++slot) {
    const std::uint64_t lo = slot * chunk;
    if (lo >= n) break;
    const std::uint64_t hi = lo + chunk < n ? lo + chunk : n;
    pool.emplace_back([slot, lo, hi, &fn] { fn(slot, lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}
