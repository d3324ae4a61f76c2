#pragma once

#include <functional>

namespace satgraph {

/// Worker count for the few internally parallel loops. Results are
/// contractually independent of this setting; deterministic merges only.
int worker_count();
void set_worker_count(int n);

/// Applies fn to 0..count-1, possibly on several threads, preserving the
/// sequential semantics: fn must only write to its own slot.
void parallel_index_for(int count, const std::function<void(int)>& fn);

}  // namespace satgraph
