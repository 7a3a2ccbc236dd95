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

#ifndef SUPERCAT_ENUMERATE_HPP
#define SUPERCAT_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supercat/path.hpp"

namespace supercat {

/// Lazy lexicographic generator of all nonnegative paths of a fixed length
/// that end on a fixed level, optionally below a fixed prefix.
///
/// Generation backtracks over prefixes and only ever extends a prefix from
/// which the terminal level is still reachable, so each advance costs
/// amortized O(length). current() is updated in place; copy it to keep it.
template <PathStep Step>
class PathGenerator {
 public:
  static constexpr bool kHasLevelSteps = std::is_same_v<Step, MotzkinStep>;

  PathGenerator(std::size_t length, int target, std::span<const Step> prefix = {})
      : length_(length), target_(target), locked_(prefix.size()) {
    current_.steps_.assign(length_, kAlphabet<Step>.front());
    current_.levels_.assign(length_ + 1, 0);
    if (prefix.size() > length_ || !feasible(0, 0)) {
      done_ = true;
      return;
    }
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      current_.steps_[i] = prefix[i];
      current_.levels_[i + 1] = current_.levels_[i] + increment(prefix[i]);
      if (!feasible(i + 1, current_.levels_[i + 1])) {
        done_ = true;
        return;
      }
    }
    fill_from(locked_);
  }

  bool done() const noexcept { return done_; }
  const LatticePath<Step>& current() const noexcept { return current_; }

  /// Moves to the lexicographic successor; sets done() when exhausted.
  void advance() {
    for (std::size_t i = length_; i-- > locked_;) {
      const int y = current_.levels_[i];
      const auto pos = static_cast<std::size_t>(current_.steps_[i]);
      for (std::size_t k = pos + 1; k < kAlphabet<Step>.size(); ++k) {
        const Step s = kAlphabet<Step>[k];
        if (feasible(i + 1, y + increment(s))) {
          current_.steps_[i] = s;
          current_.levels_[i + 1] = y + increment(s);
          fill_from(i + 1);
          return;
        }
      }
    }
    done_ = true;
  }

  std::optional<LatticePath<Step>> next() {
    if (done_) return std::nullopt;
    LatticePath<Step> out = current_;
    advance();
    return out;
  }

  class iterator {
   public:
    using value_type = LatticePath<Step>;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(PathGenerator* gen) : gen_(gen) {}

    const LatticePath<Step>& operator*() const { return gen_->current(); }
    const LatticePath<Step>* operator->() const { return &gen_->current(); }
    iterator& operator++() {
      gen_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.gen_->done();
    }

   private:
    PathGenerator* gen_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const noexcept { return {}; }

  std::size_t length() const noexcept { return length_; }
  int target() const noexcept { return target_; }

 private:
  bool feasible(std::size_t x, int y) const noexcept {
    if (y < 0) return false;
    const auto remaining = static_cast<long>(length_ - x);
    const long gap = std::labs(static_cast<long>(y) - target_);
    if (gap > remaining) return false;
    return kHasLevelSteps || (remaining - gap) % 2 == 0;
  }

  // Lexicographically smallest feasible completion from point x on.
  void fill_from(std::size_t x) {
    for (std::size_t i = x; i < length_; ++i) {
      const int y = current_.levels_[i];
      for (Step s : kAlphabet<Step>) {
        if (feasible(i + 1, y + increment(s))) {
          current_.steps_[i] = s;
          current_.levels_[i + 1] = y + increment(s);
          break;
        }
      }
    }
  }

  std::size_t length_;
  int target_;
  std::size_t locked_;
  bool done_ = false;
  LatticePath<Step> current_;
};

/// All Dyck paths of length 2n, U < D.
inline PathGenerator<DyckStep> enum_dyck(std::size_t n) {
  return PathGenerator<DyckStep>(2 * n, 0);
}

/// All 2-Motzkin paths of the given length, U < D < S < W.
inline PathGenerator<MotzkinStep> enum_motzkin2(std::size_t length) {
  return PathGenerator<MotzkinStep>(length, 0);
}

/// Nonnegative paths of length 2n-1 ending on level 2r-1.
inline PathGenerator<DyckStep> enum_ballot(int n, int r) {
  if (r < 1 || r > n) {
    throw std::invalid_argument("enum_ballot: need 1 <= r <= n, got n=" + std::to_string(n) +
                                ", r=" + std::to_string(r));
  }
  return PathGenerator<DyckStep>(static_cast<std::size_t>(2 * n - 1), 2 * r - 1);
}

/// Nonnegative paths of the given length ending on level 2.
inline PathGenerator<DyckStep> enum_ballot_even(std::size_t length) {
  return PathGenerator<DyckStep>(length, 2);
}

template <class Generator>
std::uint64_t count_paths(Generator&& gen) {
  std::uint64_t n = 0;
  for (; !gen.done(); gen.advance()) ++n;
  return n;
}

/// Ordered pair of (possibly empty) Dyck paths.
struct DyckPair {
  DyckPath first;
  DyckPath second;

  friend bool operator==(const DyckPair&, const DyckPair&) = default;
  friend auto operator<=>(const DyckPair& a, const DyckPair& b) {
    if (auto c = a.first <=> b.first; c != 0) return c;
    return a.second <=> b.second;
  }
};

/// Every ordered pair (first, second) of Dyck paths with total length 2n,
/// ordered by the semilength of first, then lexicographically.
class DyckPairStream {
 public:
  explicit DyckPairStream(std::size_t n)
      : n_(n), first_(enum_dyck(0)), second_(enum_dyck(n)) {}

  std::optional<DyckPair> next() {
    while (first_split_ <= n_) {
      if (!first_.done() && !second_.done()) {
        DyckPair out{first_.current(), second_.current()};
        second_.advance();
        if (second_.done()) {
          first_.advance();
          if (!first_.done()) second_ = enum_dyck(n_ - first_split_);
        }
        return out;
      }
      if (++first_split_ > n_) break;
      first_ = enum_dyck(first_split_);
      second_ = enum_dyck(n_ - first_split_);
    }
    return std::nullopt;
  }

 private:
  std::size_t n_;
  std::size_t first_split_ = 0;
  PathGenerator<DyckStep> first_;
  PathGenerator<DyckStep> second_;
};

inline DyckPairStream enum_pairs_total(std::size_t n) { return DyckPairStream(n); }

}  // namespace supercat

#endif  // SUPERCAT_ENUMERATE_HPP
