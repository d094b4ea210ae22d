#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace univalence {

/// Applies fn to every input on `workers` threads. Results keep input order;
/// if any call throws, the exception of the lowest failing index is rethrown
/// so failures do not depend on scheduling.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& inputs, Fn fn, std::size_t workers)
    -> std::vector<decltype(fn(inputs.front()))> {
  using Out = decltype(fn(inputs.front()));
  const std::size_t n = inputs.size();
  std::vector<Out> out(n);
  std::vector<std::exception_ptr> errors(n);
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        out[i] = fn(inputs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
        return;
      }
    }
  };
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers <= 1) {
    run_range(0, n);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      if (begin >= end) break;
      threads.emplace_back(run_range, begin, end);
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace univalence
