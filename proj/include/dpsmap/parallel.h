// Copyright 2026 The dpsmap Authors
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

#ifndef DPSMAP_PARALLEL_H
#define DPSMAP_PARALLEL_H

#include <cstddef>
#include <functional>

namespace dpsmap {

/// Worker count for per-point loops. Reads `DPSMAP_THREADS`; defaults to the
/// hardware concurrency.
unsigned thread_count();

/// Calls body(i) for every i in [0, count). Each index is visited exactly once;
/// bodies must write only to index-private outputs.
void parallel_for(size_t count, const std::function<void(size_t)> &body);

}  // namespace dpsmap

#endif
