// Copyright 2026 The ionlattice Authors
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

#pragma once

#include <cstdint>
#include <exception>
#include <mutex>

#include <omp.h>

namespace ionlattice {

// Runs body(k) for k in [0, count) across OpenMP threads with a static
// schedule. The first exception thrown by any iteration is rethrown on the
// calling thread after the loop.
template <typename Body>
void parallel_for(std::int64_t count, Body &&body) {
    std::exception_ptr failure;
    std::mutex failure_lock;
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < count; ++k) {
        try {
            body(k);
        } catch (...) {
            std::lock_guard<std::mutex> guard(failure_lock);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

inline int worker_count() {
    return omp_get_max_threads();
}

}  // namespace ionlattice
