// Copyright 2026 The fracpoisson Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef FRACPOISSON_DETAIL_PARALLEL_HPP
#define FRACPOISSON_DETAIL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace fracpoisson::detail {

/// Worker count: hardware concurrency, capped by FRACPOISSON_THREADS.
std::size_t max_threads();

/// Splits [0, n) into contiguous chunks and runs body(begin, end) on each,
/// one chunk per worker. The first exception thrown by any chunk is
/// rethrown after all workers join.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

/// Runs body(i) for i in [0, n) with at most max_threads() workers pulling
/// indices from a shared counter.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace fracpoisson::detail

#endif  // FRACPOISSON_DETAIL_PARALLEL_HPP
