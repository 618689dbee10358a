#pragma once

#include <cstddef>
#include <functional>

namespace thermoqubit {

/// 0 means "use the hardware concurrency".
unsigned resolve_thread_count(unsigned requested);

/// Calls body(i) for i in [0, count) on up to `threads` workers. Each index is
/// visited exactly once; results must not depend on which worker runs it.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace thermoqubit
