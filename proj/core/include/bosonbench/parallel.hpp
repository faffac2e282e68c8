// Copyright 2026 The bosonbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOSONBENCH_PARALLEL_HPP
#define BOSONBENCH_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace bb {

/// Resolves a worker count: n > 0 is used as given, n == 0 falls back to the
/// BOSONBENCH_WORKERS environment variable, then to hardware concurrency.
int resolve_workers(int n);

/// Runs fn(chunk_index, begin, end) over [0, count) split into fixed-size
/// chunks. Chunk boundaries depend only on chunk_size, never on the worker
/// count, so callers that store one partial result per chunk and reduce the
/// chunks in index order get bit-identical results for any worker count.
/// Exceptions thrown by fn are rethrown on the caller's thread.
void parallel_chunks(std::size_t count, std::size_t chunk_size, int workers,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace bb

#endif  // BOSONBENCH_PARALLEL_HPP
