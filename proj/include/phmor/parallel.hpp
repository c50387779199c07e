// Copyright (c) the phmor contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef PHMOR_PARALLEL_HPP
#define PHMOR_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace phmor
{

// Worker count used for embarrassingly parallel loops. Defaults to the
// hardware concurrency and can be overridden with PHMOR_NUM_THREADS.
int NumThreads();

// Runs body(i) for i in [0, count). Each index is executed exactly once; the
// caller must make body(i) write only to its own output slot so results do
// not depend on scheduling. Exceptions are captured and rethrown (first one
// wins).
void ParallelFor(std::size_t count, const std::function<void(std::size_t)> &body);

}  // namespace phmor

#endif  // PHMOR_PARALLEL_HPP
