#pragma once

#include <cstddef>
#include <functional>

namespace dspringer {

/// Worker count used by parallel_for; defaults to 1.
void set_parallelism(int workers);
int parallelism();

/// Runs body(i) for i in [0, count) on up to parallelism() threads.  The
/// first exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace dspringer
