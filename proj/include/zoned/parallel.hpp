/*
 Copyright 2026 The zoned Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <cstddef>
#include <functional>

namespace zoned {

/// Upper bound on worker threads used by per-point evaluation and
/// enumeration. Defaults to the hardware concurrency; 0 resets to that.
void set_max_threads(unsigned n);
unsigned max_threads();

/// Runs fn(begin, end) over a partition of [0, count) into contiguous chunks.
/// Chunks never overlap, so callers writing disjoint outputs stay
/// deterministic. Runs inline when count < min_per_worker * 2 or only one
/// thread is allowed.
void parallel_chunks(std::size_t count, std::size_t min_per_worker,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace zoned
