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

#ifndef SUPERCAT_PATH_HPP
#define SUPERCAT_PATH_HPP

// Lattice paths over the Dyck alphabet {U,D} and the 2-Motzkin alphabet
// {U,D,S,W}, their level profiles, family predicates and the marker points
// (X, R, leftmost maximum) used by the path surgeries in bijections.hpp.
//
// Indexing convention used throughout the library: points are 0-based
// x-coordinates, so levels[x] is the level after x steps; step i joins
// point i to point i+1.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace supercat {

enum class DyckStep : std::uint8_t { Up, Down };

/// Canonical order U < D < S < W is the declaration order.
enum class MotzkinStep : std::uint8_t { Up, Down, Straight, Wavy };

template <class Step>
concept PathStep = std::is_same_v<Step, DyckStep> || std::is_same_v<Step, MotzkinStep>;

template <PathStep Step>
inline constexpr auto kAlphabet = [] {
  if constexpr (std::is_same_v<Step, DyckStep>) {
    return std::array{DyckStep::Up, DyckStep::Down};
  } else {
    return std::array{MotzkinStep::Up, MotzkinStep::Down, MotzkinStep::Straight,
                      MotzkinStep::Wavy};
  }
}();

template <PathStep Step>
constexpr int increment(Step s) noexcept {
  if (s == Step::Up) return 1;
  if (s == Step::Down) return -1;
  return 0;
}

template <PathStep Step>
constexpr char step_char(Step s) noexcept {
  if constexpr (std::is_same_v<Step, MotzkinStep>) {
    if (s == MotzkinStep::Straight) return 'S';
    if (s == MotzkinStep::Wavy) return 'W';
  }
  return s == Step::Up ? 'U' : 'D';
}

template <PathStep Step>
constexpr std::optional<Step> step_from_char(char c) noexcept {
  for (Step s : kAlphabet<Step>) {
    if (step_char(s) == c) return s;
  }
  return std::nullopt;
}

template <PathStep Step>
constexpr Step mirror(Step s) noexcept {
  if (s == Step::Up) return Step::Down;
  if (s == Step::Down) return Step::Up;
  return s;
}

/// Raised by parse_path; index() is the position of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t index, char c)
      : std::invalid_argument("invalid step '" + std::string(1, c) + "' at index " +
                              std::to_string(index)),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

template <PathStep Step>
class PathGenerator;

/// Immutable step sequence with its level profile.
///
/// levels().size() == size() + 1 and levels()[0] == 0. Nothing here enforces
/// nonnegativity or a terminal level; that is validate()'s job.
template <PathStep Step>
class LatticePath {
 public:
  using step_type = Step;

  LatticePath() : levels_{0} {}

  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
    levels_.reserve(steps_.size() + 1);
    levels_.push_back(0);
    for (Step s : steps_) levels_.push_back(levels_.back() + increment(s));
  }

  std::span<const Step> steps() const noexcept { return steps_; }
  std::span<const int> levels() const noexcept { return levels_; }

  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

  Step step(std::size_t i) const { return steps_.at(i); }

  int level_at(std::size_t x) const {
    if (x >= levels_.size()) {
      throw std::out_of_range("level_at: x = " + std::to_string(x) +
                              " outside [0, " + std::to_string(steps_.size()) + "]");
    }
    return levels_[x];
  }

  int final_level() const noexcept { return levels_.back(); }
  int height() const noexcept { return *std::max_element(levels_.begin(), levels_.end()); }
  int min_level() const noexcept { return *std::min_element(levels_.begin(), levels_.end()); }

  friend bool operator==(const LatticePath& a, const LatticePath& b) {
    return a.steps_ == b.steps_;
  }
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  friend class PathGenerator<Step>;

  std::vector<Step> steps_;
  std::vector<int> levels_;
};

using DyckPath = LatticePath<DyckStep>;
using TwoMotzkinPath = LatticePath<MotzkinStep>;
using BallotPath = LatticePath<DyckStep>;

template <PathStep Step>
LatticePath<Step> parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto s = step_from_char<Step>(text[i]);
    if (!s) throw ParseError(i, text[i]);
    steps.push_back(*s);
  }
  return LatticePath<Step>(std::move(steps));
}

inline DyckPath parse_dyck(std::string_view text) { return parse_path<DyckStep>(text); }
inline TwoMotzkinPath parse_motzkin(std::string_view text) {
  return parse_path<MotzkinStep>(text);
}

template <PathStep Step>
std::string to_string(const LatticePath<Step>& path) {
  std::string out;
  out.reserve(path.size());
  for (Step s : path.steps()) out.push_back(step_char(s));
  return out;
}

/// Reads a 2-Motzkin word as a Dyck word when it has no level steps.
inline std::optional<DyckPath> as_dyck(const TwoMotzkinPath& path) {
  std::vector<DyckStep> steps;
  steps.reserve(path.size());
  for (MotzkinStep s : path.steps()) {
    if (s == MotzkinStep::Up) steps.push_back(DyckStep::Up);
    else if (s == MotzkinStep::Down) steps.push_back(DyckStep::Down);
    else return std::nullopt;
  }
  return DyckPath(std::move(steps));
}

inline TwoMotzkinPath as_motzkin(const DyckPath& path) {
  std::vector<MotzkinStep> steps;
  steps.reserve(path.size());
  for (DyckStep s : path.steps()) {
    steps.push_back(s == DyckStep::Up ? MotzkinStep::Up : MotzkinStep::Down);
  }
  return TwoMotzkinPath(std::move(steps));
}

// ---------------------------------------------------------------------------
// Families

namespace family {
struct Dyck {};
struct Motzkin2 {};
/// Nonnegative, length 2n-1, final level 2r-1.
struct Ballot {
  int n;
  int r;
};
/// Nonnegative, given length, final level 2.
struct BallotEven {
  std::size_t length;
};
}  // namespace family

using Family = std::variant<family::Dyck, family::Motzkin2, family::Ballot, family::BallotEven>;

template <PathStep Step>
bool validate(const LatticePath<Step>& path, const Family& fam) {
  const bool nonneg = path.min_level() >= 0;
  const bool has_level_steps =
      std::any_of(path.steps().begin(), path.steps().end(),
                  [](Step s) { return increment(s) == 0; });
  return std::visit(
      [&](const auto& f) -> bool {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, family::Motzkin2>) {
          return nonneg && path.final_level() == 0;
        } else if constexpr (std::is_same_v<F, family::Dyck>) {
          return nonneg && !has_level_steps && path.final_level() == 0 && path.size() % 2 == 0;
        } else if constexpr (std::is_same_v<F, family::Ballot>) {
          if (f.n < 1 || f.r < 1) return false;
          return nonneg && !has_level_steps &&
                 path.size() == static_cast<std::size_t>(2 * f.n - 1) &&
                 path.final_level() == 2 * f.r - 1;
        } else {
          return nonneg && !has_level_steps && path.size() == f.length &&
                 path.final_level() == 2;
        }
      },
      fam);
}

template <PathStep Step>
bool is_dyck(const LatticePath<Step>& path) {
  return validate(path, family::Dyck{});
}

// ---------------------------------------------------------------------------
// Markers

/// Named points and height statistics of a nonempty path.
///
/// x_point is the last point at level one up to and including rightmost_max;
/// h_minus is the maximum over levels[0..x_point], h_plus over
/// levels[x_point..end]. For height-one Dyck paths x_point == rightmost_max.
struct PathMarkers {
  int height = 0;
  std::size_t rightmost_max = 0;
  std::size_t leftmost_max = 0;
  std::size_t x_point = 0;
  int h_minus = 0;
  int h_plus = 0;

  friend bool operator==(const PathMarkers&, const PathMarkers&) = default;
};

namespace detail {

inline std::size_t leftmost_max(std::span<const int> levels) {
  return static_cast<std::size_t>(std::max_element(levels.begin(), levels.end()) -
                                  levels.begin());
}

inline std::size_t rightmost_max(std::span<const int> levels) {
  auto rit = std::max_element(levels.rbegin(), levels.rend());
  return static_cast<std::size_t>(levels.rend() - rit) - 1;
}

// Precondition: some point in [0, last] has level one.
inline std::size_t last_level_one_upto(std::span<const int> levels, std::size_t last) {
  for (std::size_t x = last + 1; x-- > 0;) {
    if (levels[x] == 1) return x;
  }
  throw std::logic_error("no level-one point before the given index");
}

inline PathMarkers scan_markers(std::span<const int> levels) {
  PathMarkers mk;
  mk.leftmost_max = leftmost_max(levels);
  mk.rightmost_max = rightmost_max(levels);
  mk.height = levels[mk.rightmost_max];
  mk.x_point = last_level_one_upto(levels, mk.rightmost_max);
  mk.h_minus = *std::max_element(levels.begin(), levels.begin() + mk.x_point + 1);
  mk.h_plus = *std::max_element(levels.begin() + mk.x_point, levels.end());
  return mk;
}

}  // namespace detail

inline PathMarkers markers(const DyckPath& path) {
  if (path.empty()) throw std::invalid_argument("markers undefined for empty path");
  if (!is_dyck(path)) {
    throw std::invalid_argument("markers: '" + to_string(path) + "' is not a Dyck path");
  }
  return detail::scan_markers(path.levels());
}

/// Mirror image: steps read right to left with Up and Down exchanged.
template <PathStep Step>
LatticePath<Step> reverse(const LatticePath<Step>& path) {
  std::vector<Step> steps(path.steps().rbegin(), path.steps().rend());
  for (Step& s : steps) s = mirror(s);
  return LatticePath<Step>(std::move(steps));
}

template <PathStep Step>
int level_at(const LatticePath<Step>& path, std::size_t x) {
  return path.level_at(x);
}

}  // namespace supercat

#endif  // SUPERCAT_PATH_HPP
