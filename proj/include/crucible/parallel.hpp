#pragma once

#include <cstddef>
#include <functional>

namespace crucible {

// Worker cap from ZETA_CRUCIBLE_THREADS; 0, unset or unparsable means one
// worker per hardware thread.
unsigned worker_count();

// Runs task(0) .. task(count - 1) on up to worker_count() threads. Tasks must
// write only to their own slot; the first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace crucible
