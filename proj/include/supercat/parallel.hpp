// Copyright 2026 The supercat Authors
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

#ifndef SUPERCAT_PARALLEL_HPP
#define SUPERCAT_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "supercat/enumerate.hpp"

namespace supercat {

namespace detail {

template <PathStep Step>
void collect_prefixes(std::size_t length, int target, std::size_t depth, std::vector<Step>& cur,
                      int level, std::vector<std::vector<Step>>& out) {
  if (cur.size() == depth) {
    out.push_back(cur);
    return;
  }
  for (Step s : kAlphabet<Step>) {
    const int y = level + increment(s);
    if (y < 0) continue;
    cur.push_back(s);
    // Infeasible prefixes produce an empty generator; pruning here just
    // keeps the work list short.
    if (!PathGenerator<Step>(length, target, cur).done()) {
      collect_prefixes(length, target, depth, cur, y, out);
    }
    cur.pop_back();
  }
}

}  // namespace detail

/// Folds `visit(acc, path)` over every nonnegative path of `length` ending at
/// `target`, split by prefix across `jobs` threads.
///
/// Partial results are merged with `merge(acc, part)` in prefix order, so the
/// outcome is independent of scheduling when merge is associative.
template <PathStep Step, class Result, class Visit, class Merge>
Result parallel_fold(std::size_t length, int target, std::size_t jobs, Visit visit,
                     Merge merge) {
  auto run = [&](std::span<const Step> prefix) {
    Result acc{};
    PathGenerator<Step> gen(length, target, prefix);
    for (; !gen.done(); gen.advance()) visit(acc, gen.current());
    return acc;
  };
  if (jobs <= 1 || length < 4) return run({});

  const std::size_t depth = std::min<std::size_t>(length, 6);
  std::vector<std::vector<Step>> prefixes;
  std::vector<Step> cur;
  detail::collect_prefixes<Step>(length, target, depth, cur, 0, prefixes);

  std::vector<Result> parts(prefixes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  {
    std::vector<std::jthread> workers;
    const std::size_t n_workers = std::min(jobs, prefixes.size());
    for (std::size_t w = 0; w < n_workers; ++w) {
      workers.emplace_back([&] {
        try {
          for (std::size_t i = next++; i < prefixes.size(); i = next++) {
            parts[i] = run(prefixes[i]);
          }
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
          next = prefixes.size();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);

  Result total{};
  for (auto& part : parts) merge(total, part);
  return total;
}

}  // namespace supercat

#endif  // SUPERCAT_PARALLEL_HPP
