#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace cubic {

// Worker count: CUBIC_ORDERS_THREADS caps it, 0 or unset means auto.
int worker_count();

// Applies fn(index) over [0, count) with results placed in index order.
// Static chunking; the output never depends on the worker count.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn, std::size_t>> {
  using R = std::invoke_result_t<Fn, std::size_t>;
  std::vector<R> out(count);
  int workers = worker_count();
  if (workers <= 1 || count < 2) {
    for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
    return out;
  }
  if (static_cast<std::size_t>(workers) > count)
    workers = static_cast<int>(count);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = count * w / workers;
    std::size_t hi = count * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] {
      try {
        for (std::size_t k = lo; k < hi; ++k) out[k] = fn(k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

// Applies fn(lo, hi) -> vector<T> over a static partition of [0, count) and
// concatenates the pieces in partition order.
template <class Fn>
auto parallel_chunks(std::size_t count, Fn&& fn)
    -> std::invoke_result_t<Fn, std::size_t, std::size_t> {
  using Vec = std::invoke_result_t<Fn, std::size_t, std::size_t>;
  int workers = worker_count();
  if (workers <= 1 || count < 4096) return fn(0, count);
  if (static_cast<std::size_t>(workers) > count)
    workers = static_cast<int>(count);
  std::vector<Vec> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = count * w / workers;
    std::size_t hi = count * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] {
      try {
        parts[w] = fn(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Vec out;
  std::size_t total = 0;
  for (auto& p : parts) total += p.size();
  out.reserve(total);
  for (auto& p : parts)
    out.insert(out.end(), std::make_move_iterator(p.begin()),
               std::make_move_iterator(p.end()));
  return out;
}

}  // namespace cubic
