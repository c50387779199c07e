// Copyright (c) the phmor contributors
// SPDX-License-Identifier: Apache-2.0

#include "phmor/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace phmor
{

int NumThreads()
{
  if (const char *env = std::getenv("PHMOR_NUM_THREADS"))
  {
    int n = std::atoi(env);
    if (n > 0)
    {
      return n;
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void ParallelFor(std::size_t count, const std::function<void(std::size_t)> &body)
{
  const int threads = NumThreads();
  if (count == 0)
  {
    return;
  }
  if (threads <= 1 || count == 1)
  {
    for (std::size_t i = 0; i < count; i++)
    {
      body(i);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]()
  {
    while (true)
    {
      std::size_t i = next.fetch_add(1);
      if (i >= count)
      {
        return;
      }
      try
      {
        body(i);
      }
      catch (...)
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error)
        {
          first_error = std::current_exception();
        }
      }
    }
  };

  std::vector<std::thread> pool;
  const std::size_t n_workers = std::min<std::size_t>(threads, count);
  pool.reserve(n_workers);
  for (std::size_t t = 0; t < n_workers; t++)
  {
    pool.emplace_back(worker);
  }
  for (auto &th : pool)
  {
    th.join();
  }
  if (first_error)
  {
    std::rethrow_exception(first_error);
  }
}

}  // namespace phmor
