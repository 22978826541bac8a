#pragma once

#include <cstddef>
#include <functional>

namespace emmc {

/// Worker count used by parallel_for. Defaults to 1; the CLI sets it from --threads.
void set_thread_count(int n);
int thread_count();

/// Runs body(i) for i in [0, n) using static contiguous chunks. Each index must write
/// only its own output slot, so results do not depend on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace emmc
