#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "upsilon/kahan.hpp"

namespace upsilon {

int max_threads();
void set_max_threads(int n);

namespace detail {

// Runs fn(block_index) for block_index in [0, nblocks) on up to max_threads()
// workers. Rethrows the first worker exception.
template <class F>
void run_blocks(std::uint64_t nblocks, F&& fn) {
  int t = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(max_threads()), nblocks));
  if (t <= 1) {
    for (std::uint64_t b = 0; b < nblocks; ++b) fn(b);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> workers;
  workers.reserve(t);
  for (int i = 0; i < t; ++i) {
    workers.emplace_back([&] {
      try {
        for (;;) {
          std::uint64_t b = next.fetch_add(1);
          if (b >= nblocks || failed.load()) return;
          fn(b);
        }
      } catch (...) {
        std::scoped_lock lk(err_mu);
        if (!err) err = std::current_exception();
        failed.store(true);
      }
    });
  }
  for (auto& w : workers) w.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace detail

// Splits [lo, hi) into fixed-size blocks, evaluates fn(block_lo, block_hi)
// -> double on each, and combines the block values in ascending block order
// with compensated addition. The block grid depends only on `block`, so the
// result is independent of the worker count.
template <class F>
double parallel_block_sum(std::uint64_t lo, std::uint64_t hi,
                          std::uint64_t block, F&& fn) {
  if (hi <= lo) return 0.0;
  std::uint64_t nblocks = (hi - lo + block - 1) / block;
  std::vector<double> partial(nblocks, 0.0);
  detail::run_blocks(nblocks, [&](std::uint64_t b) {
    std::uint64_t blo = lo + b * block;
    std::uint64_t bhi = std::min(hi, blo + block);
    partial[b] = fn(blo, bhi);
  });
  KahanSum s;
  for (double d : partial) s += d;
  return s.value();
}

// Integer variant; exact, so any reduction order works.
template <class F>
std::uint64_t parallel_block_count(std::uint64_t lo, std::uint64_t hi,
                                   std::uint64_t block, F&& fn) {
  if (hi <= lo) return 0;
  std::uint64_t nblocks = (hi - lo + block - 1) / block;
  std::vector<std::uint64_t> partial(nblocks, 0);
  detail::run_blocks(nblocks, [&](std::uint64_t b) {
    std::uint64_t blo = lo + b * block;
    std::uint64_t bhi = std::min(hi, blo + block);
    partial[b] = fn(blo, bhi);
  });
  std::uint64_t total = 0;
  for (auto c : partial) total += c;
  return total;
}

}  // namespace upsilon
