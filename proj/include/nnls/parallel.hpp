#pragma once

#include <cstddef>
#include <functional>

namespace nnls {

/// Deterministic parallel map over [0, count): static block partition, each
/// index writes only its own output slot, so results are bitwise independent
/// of the worker count. workers <= 0 selects the hardware concurrency.
/// The first exception thrown by any body is rethrown after the join.
void parallel_for(std::ptrdiff_t count, int workers, const std::function<void(std::ptrdiff_t)>& body);

}  // namespace nnls
