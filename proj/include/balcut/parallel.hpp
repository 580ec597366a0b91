#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace balcut {

// Runs fn(index, worker) for index in [0, count) on up to `threads` workers.
// Each index is visited exactly once; results must not depend on the worker.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t, std::size_t)>& fn);

// Deterministic seed for stream (a, b) under a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

}  // namespace balcut
