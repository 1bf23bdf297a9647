// Copyright 2026 The coherentsim Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace coherentsim {

/// Worker-thread cap: hardware concurrency, clamped by the COHERENT_THREADS
/// environment variable when it parses as a positive integer. Always >= 1.
int thread_budget();

/// Runs fn(i) once for every i in [0, count), on up to thread_budget()
/// threads. Callers must write results into per-index slots; the schedule is
/// nondeterministic but slot-indexed output makes the result deterministic.
/// The first exception thrown by fn is rethrown after all workers finish.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn);

}  // namespace coherentsim
