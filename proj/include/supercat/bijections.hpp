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

#ifndef SUPERCAT_BIJECTIONS_HPP
#define SUPERCAT_BIJECTIONS_HPP

// Constructive maps on Dyck and 2-Motzkin paths.
//
//  * motzkin_to_dyck / dyck_to_motzkin: U->UU, D->DD, S->UD, W->DU, wrapped
//    in an outer U...D. Sends M_k onto D_{k+1}.
//  * weight / signed_count: a 2-Motzkin path of length m+n-2 is positive
//    (weight +1) when the point after m-1 steps is on an even level, and
//    P(m,n) - N(m,n) = T(m,n).
//  * classify_start: Dyck paths of length 2n+2 split into A (UDU...),
//    B (UUD...) and N (UUU...); N splits into N* and N** according to
//    whether level one is attained strictly between point 3 and the
//    rightmost maximum R.
//  * injection_f: N*_{n+1} -> D_n, hits everything except (UD)^n.
//  * injection_g: N**_{n+1} -> D_n, hits exactly {h+ >= h- + 3}.
//  * to_pair / from_pair: {h+ <= h- + 2} -> ordered pairs of Dyck paths
//    with height difference at most one.
//
// Index translation: "the k-th step" in prose is step index k-1 here, so the
// second and third steps are indices 1 and 2. Points are 0-based x values.
//
// Every map validates its output and throws std::logic_error if the result
// is not in the expected family. Inputs outside a map's domain raise
// std::invalid_argument (bad shape or wrong class) or std::domain_error
// (a well-formed path outside the image of the forward map).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "supercat/enumerate.hpp"
#include "supercat/numbers.hpp"
#include "supercat/parallel.hpp"
#include "supercat/path.hpp"

namespace supercat {

namespace detail {

template <PathStep Step>
const LatticePath<Step>& expect(const LatticePath<Step>& path, const Family& fam,
                                std::string_view what) {
  if (!validate(path, fam)) {
    throw std::logic_error(std::string(what) + " produced invalid path '" + to_string(path) +
                           "'");
  }
  return path;
}

inline void require_dyck(const DyckPath& path, std::string_view what) {
  if (!is_dyck(path)) {
    throw std::invalid_argument(std::string(what) + ": '" + to_string(path) +
                                "' is not a Dyck path");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Canonical 2-Motzkin <-> Dyck bijection

inline DyckPath motzkin_to_dyck(const TwoMotzkinPath& path) {
  if (!validate(path, family::Motzkin2{})) {
    throw std::invalid_argument("motzkin_to_dyck: '" + to_string(path) +
                                "' is not a 2-Motzkin path");
  }
  using enum DyckStep;
  std::vector<DyckStep> out;
  out.reserve(2 * path.size() + 2);
  out.push_back(Up);
  for (MotzkinStep s : path.steps()) {
    switch (s) {
      case MotzkinStep::Up: out.insert(out.end(), {Up, Up}); break;
      case MotzkinStep::Down: out.insert(out.end(), {Down, Down}); break;
      case MotzkinStep::Straight: out.insert(out.end(), {Up, Down}); break;
      case MotzkinStep::Wavy: out.insert(out.end(), {Down, Up}); break;
    }
  }
  out.push_back(Down);
  DyckPath result(std::move(out));
  detail::expect(result, family::Dyck{}, "motzkin_to_dyck");
  return result;
}

inline TwoMotzkinPath dyck_to_motzkin(const DyckPath& path) {
  const auto steps = path.steps();
  if (steps.size() < 2 || steps.size() % 2 != 0 || steps.front() != DyckStep::Up ||
      steps.back() != DyckStep::Down) {
    throw std::invalid_argument("dyck_to_motzkin: malformed input '" + to_string(path) + "'");
  }
  detail::require_dyck(path, "dyck_to_motzkin");
  std::vector<MotzkinStep> out;
  out.reserve(steps.size() / 2 - 1);
  for (std::size_t i = 1; i + 1 < steps.size(); i += 2) {
    const bool a = steps[i] == DyckStep::Up;
    const bool b = steps[i + 1] == DyckStep::Up;
    if (a && b) out.push_back(MotzkinStep::Up);
    else if (!a && !b) out.push_back(MotzkinStep::Down);
    else if (a) out.push_back(MotzkinStep::Straight);
    else out.push_back(MotzkinStep::Wavy);
  }
  TwoMotzkinPath result(std::move(out));
  detail::expect(result, family::Motzkin2{}, "dyck_to_motzkin");
  return result;
}

// ---------------------------------------------------------------------------
// Signed counts

/// +1 if the m-th step begins on an even level (the point after m-1 steps),
/// -1 otherwise.
inline int weight(const TwoMotzkinPath& path, std::size_t m) {
  if (m < 1) throw std::invalid_argument("weight: m must be positive");
  if (path.size() < m - 1) {
    throw std::invalid_argument("weight: path of length " + std::to_string(path.size()) +
                                " is shorter than m-1 = " + std::to_string(m - 1));
  }
  return path.level_at(m - 1) % 2 == 0 ? 1 : -1;
}

struct SignedCount {
  ExactInt positive;
  ExactInt negative;

  ExactInt difference() const { return positive - negative; }
  ExactInt total() const { return positive + negative; }

  friend bool operator==(const SignedCount&, const SignedCount&) = default;
};

namespace detail {

struct Tally {
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
};

inline void merge_tally(Tally& acc, const Tally& part) {
  acc.positive += part.positive;
  acc.negative += part.negative;
}

inline void require_positive(std::size_t m, std::size_t n, std::string_view what) {
  if (m < 1 || n < 1) throw std::invalid_argument(std::string(what) + ": need m, n >= 1");
}

}  // namespace detail

/// Exhaustive tally of positive and negative 2-Motzkin paths of length m+n-2.
inline SignedCount signed_count(std::size_t m, std::size_t n, std::size_t jobs = 1) {
  detail::require_positive(m, n, "signed_count");
  const std::size_t x = m - 1;
  auto tally = parallel_fold<MotzkinStep, detail::Tally>(
      m + n - 2, 0, jobs,
      [x](detail::Tally& t, const TwoMotzkinPath& p) {
        if (p.levels()[x] % 2 == 0) ++t.positive;
        else ++t.negative;
      },
      detail::merge_tally);
  return {tally.positive, tally.negative};
}

/// Same tally over Dyck paths of length 2m+2n-2, classified by the level of
/// point 2m-1 modulo 4 (1 positive, 3 negative).
inline SignedCount signed_count_dyck(std::size_t m, std::size_t n, std::size_t jobs = 1) {
  detail::require_positive(m, n, "signed_count_dyck");
  const std::size_t x = 2 * m - 1;
  auto tally = parallel_fold<DyckStep, detail::Tally>(
      2 * (m + n - 1), 0, jobs,
      [x](detail::Tally& t, const DyckPath& p) {
        const int level = p.levels()[x];
        if (level % 4 == 1) ++t.positive;
        else if (level % 4 == 3) ++t.negative;
        else throw std::logic_error("even level at an odd point");
      },
      detail::merge_tally);
  return {tally.positive, tally.negative};
}

// ---------------------------------------------------------------------------
// Start classes

enum class StartClass { A, B, NStar, NStarStar, Other };

constexpr std::string_view to_string(StartClass c) noexcept {
  switch (c) {
    case StartClass::A: return "A";
    case StartClass::B: return "B";
    case StartClass::NStar: return "N*";
    case StartClass::NStarStar: return "N**";
    case StartClass::Other: return "other";
  }
  return "?";
}

namespace detail {

// First point x with 3 < x < R at level one, or 0 if none.
inline std::size_t first_level_one_after_third_step(const DyckPath& path) {
  const auto levels = path.levels();
  const std::size_t r = detail::rightmost_max(levels);
  for (std::size_t x = 4; x < r; ++x) {
    if (levels[x] == 1) return x;
  }
  return 0;
}

}  // namespace detail

/// A, B or N by the first three steps; N refined by whether level one occurs
/// strictly between point 3 and the rightmost maximum. Prefixes that are
/// none of UDU, UUD, UUU give Other.
inline StartClass classify_start(const DyckPath& path) {
  if (path.size() < 6) {
    throw std::invalid_argument("classify_start: path length " + std::to_string(path.size()) +
                                " < 6");
  }
  using enum DyckStep;
  const auto s = path.steps();
  if (s[0] != Up) return StartClass::Other;
  if (s[1] == Down && s[2] == Up) return StartClass::A;
  if (s[1] == Up && s[2] == Down) return StartClass::B;
  if (s[1] == Up && s[2] == Up) {
    return detail::first_level_one_after_third_step(path) == 0 ? StartClass::NStar
                                                               : StartClass::NStarStar;
  }
  return StartClass::Other;
}

/// Removes the second and third steps (the contraction that sends A_{n+1}
/// and B_{n+1} onto D_n).
inline DyckPath contract_second_third(const DyckPath& path) {
  if (path.size() < 3) throw std::invalid_argument("contract_second_third: path too short");
  std::vector<DyckStep> out;
  out.reserve(path.size() - 2);
  out.push_back(path.steps()[0]);
  out.insert(out.end(), path.steps().begin() + 3, path.steps().end());
  return DyckPath(std::move(out));
}

// ---------------------------------------------------------------------------
// f : N* -> D_n

/// Drops the second and third steps and turns the down step leaving the
/// rightmost maximum R into an up step.
inline DyckPath injection_f(const DyckPath& path) {
  detail::require_dyck(path, "injection_f");
  if (path.size() < 6 || classify_start(path) != StartClass::NStar) {
    throw std::invalid_argument("injection_f: '" + to_string(path) + "' not in N*");
  }
  const auto s = path.steps();
  const std::size_t r = detail::rightmost_max(path.levels());
  std::vector<DyckStep> out;
  out.reserve(s.size() - 2);
  out.push_back(s[0]);
  out.insert(out.end(), s.begin() + 3, s.begin() + static_cast<std::ptrdiff_t>(r));
  out.push_back(DyckStep::Up);
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(r) + 1, s.end());
  DyckPath result(std::move(out));
  detail::expect(result, family::Dyck{}, "injection_f");
  if (result.height() < 2) throw std::logic_error("injection_f produced height < 2");
  return result;
}

/// Inverse of injection_f on paths of height at least two: with Q the
/// leftmost maximum, inserts UU after the first step and turns the up step
/// into Q into a down step.
inline DyckPath injection_f_inverse(const DyckPath& path) {
  detail::require_dyck(path, "injection_f_inverse");
  if (path.height() <= 1) {
    throw std::domain_error("injection_f_inverse: height " + std::to_string(path.height()) +
                            " <= 1 is outside the image of f");
  }
  const auto s = path.steps();
  const std::size_t q = detail::leftmost_max(path.levels());
  std::vector<DyckStep> out;
  out.reserve(s.size() + 2);
  out.push_back(s[0]);
  out.insert(out.end(), {DyckStep::Up, DyckStep::Up});
  out.insert(out.end(), s.begin() + 1, s.begin() + static_cast<std::ptrdiff_t>(q) - 1);
  out.push_back(DyckStep::Down);
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(q), s.end());
  DyckPath result(std::move(out));
  detail::expect(result, family::Dyck{}, "injection_f_inverse");
  if (classify_start(result) != StartClass::NStar) {
    throw std::logic_error("injection_f_inverse produced a path outside N*");
  }
  return result;
}

// ---------------------------------------------------------------------------
// g : N** -> D_n

/// First half of g: with Y the first level-one point strictly between point 3
/// and R, drops the second and third steps and turns the two down steps XY
/// into up steps. The result is a nonnegative path of length 2n ending on
/// level 2.
inline BallotPath g_stage_one(const DyckPath& path) {
  detail::require_dyck(path, "injection_g");
  if (path.size() < 6 || classify_start(path) != StartClass::NStarStar) {
    throw std::invalid_argument("injection_g: '" + to_string(path) + "' not in N**");
  }
  const auto s = path.steps();
  const std::size_t y = detail::first_level_one_after_third_step(path);
  if (s[y - 2] != DyckStep::Down || s[y - 1] != DyckStep::Down) {
    throw std::logic_error("injection_g: XY is not a pair of down steps");
  }
  std::vector<DyckStep> out;
  out.reserve(s.size() - 2);
  out.push_back(s[0]);
  out.insert(out.end(), s.begin() + 3, s.begin() + static_cast<std::ptrdiff_t>(y) - 2);
  out.insert(out.end(), {DyckStep::Up, DyckStep::Up});
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(y), s.end());
  BallotPath result(std::move(out));
  detail::expect(result, family::BallotEven{s.size() - 2}, "injection_g stage one");
  return result;
}

/// Second half of g: turns the up step into the leftmost maximum L into a
/// down step.
inline DyckPath g_stage_two(const BallotPath& ballot) {
  if (!validate(ballot, family::BallotEven{ballot.size()})) {
    throw std::invalid_argument("g_stage_two: '" + to_string(ballot) +
                                "' is not a nonnegative path ending on level 2");
  }
  const std::size_t l = detail::leftmost_max(ballot.levels());
  std::vector<DyckStep> out(ballot.steps().begin(), ballot.steps().end());
  out[l - 1] = DyckStep::Down;
  DyckPath result(std::move(out));
  detail::expect(result, family::Dyck{}, "injection_g");
  return result;
}

inline DyckPath injection_g(const DyckPath& path) {
  DyckPath result = g_stage_two(g_stage_one(path));
  const PathMarkers mk = markers(result);
  if (mk.h_plus < mk.h_minus + 3) throw std::logic_error("injection_g: h+ < h- + 3");
  return result;
}

/// Inverse of injection_g on paths with h+ >= h- + 3.
inline DyckPath injection_g_inverse(const DyckPath& path) {
  detail::require_dyck(path, "injection_g_inverse");
  if (path.empty()) throw std::domain_error("injection_g_inverse: empty path");
  const PathMarkers mk = markers(path);
  if (mk.h_plus < mk.h_minus + 3) {
    throw std::domain_error("injection_g_inverse: h+ = " + std::to_string(mk.h_plus) +
                            " <= h- + 2 = " + std::to_string(mk.h_minus + 2) +
                            ", outside the image of g");
  }
  // Undo stage two: the down step ML after the rightmost maximum M becomes up.
  std::vector<DyckStep> ballot(path.steps().begin(), path.steps().end());
  ballot[mk.rightmost_max] = DyckStep::Up;
  const BallotPath mid(ballot);
  detail::expect(mid, family::BallotEven{mid.size()}, "injection_g_inverse");

  // Undo stage one around the last level-one point X.
  const auto levels = mid.levels();
  const std::size_t x = detail::last_level_one_upto(levels, levels.size() - 1);
  if (x + 2 > ballot.size() || ballot[x] != DyckStep::Up || ballot[x + 1] != DyckStep::Up) {
    throw std::logic_error("injection_g_inverse: X is not followed by two up steps");
  }
  std::vector<DyckStep> out;
  out.reserve(ballot.size() + 2);
  out.push_back(ballot[0]);
  out.insert(out.end(), {DyckStep::Up, DyckStep::Up});
  out.insert(out.end(), ballot.begin() + 1, ballot.begin() + static_cast<std::ptrdiff_t>(x));
  out.insert(out.end(), {DyckStep::Down, DyckStep::Down});
  out.insert(out.end(), ballot.begin() + static_cast<std::ptrdiff_t>(x) + 2, ballot.end());
  DyckPath result(std::move(out));
  detail::expect(result, family::Dyck{}, "injection_g_inverse");
  if (classify_start(result) != StartClass::NStarStar) {
    throw std::logic_error("injection_g_inverse produced a path outside N**");
  }
  return result;
}

// ---------------------------------------------------------------------------
// h+ <= h- + 2 and the pair map

inline bool has_bounded_rise(const PathMarkers& mk) noexcept {
  return mk.h_plus <= mk.h_minus + 2;
}

inline DyckPath height_one_path(std::size_t n) {
  std::vector<DyckStep> steps;
  for (std::size_t i = 0; i < n; ++i) steps.insert(steps.end(), {DyckStep::Up, DyckStep::Down});
  return DyckPath(std::move(steps));
}

/// D_n paths with h+ <= h- + 2, in enumeration order, with (UD)^n listed twice.
inline std::vector<DyckPath> theorem4_members(std::size_t n) {
  std::vector<DyckPath> out;
  for (auto gen = enum_dyck(n); !gen.done(); gen.advance()) {
    const DyckPath& p = gen.current();
    if (p.empty()) continue;
    if (has_bounded_rise(markers(p))) {
      out.push_back(p);
      if (p.height() == 1) out.push_back(p);
    }
  }
  return out;
}

inline ExactInt theorem4_census(std::size_t n, std::size_t jobs = 1) {
  if (n < 1) throw std::invalid_argument("theorem4_census: n must be positive");
  auto count = parallel_fold<DyckStep, std::uint64_t>(
      2 * n, 0, jobs,
      [](std::uint64_t& acc, const DyckPath& p) {
        if (has_bounded_rise(detail::scan_markers(p.levels()))) ++acc;
      },
      [](std::uint64_t& acc, std::uint64_t part) { acc += part; });
  // The height-one path counts twice.
  return ExactInt(count) + 1;
}

/// Splits a path with h+ <= h- + 2 into an ordered pair of Dyck paths.
///
/// For height > 1: the up step leaving X and the down step leaving R are
/// flipped, which drops the stretch between them by two so the point after X
/// lands on level zero, and the path is cut there. The height-one path
/// (UD)^n yields both (path, empty) and (empty, path), in that order.
inline std::vector<DyckPair> to_pair(const DyckPath& path) {
  detail::require_dyck(path, "to_pair");
  if (path.empty()) throw std::invalid_argument("to_pair: empty path");
  const PathMarkers mk = markers(path);
  if (!has_bounded_rise(mk)) {
    throw std::invalid_argument("to_pair: h+ = " + std::to_string(mk.h_plus) + " > h- + 2 = " +
                                std::to_string(mk.h_minus + 2));
  }
  if (mk.height == 1) return {DyckPair{path, DyckPath{}}, DyckPair{DyckPath{}, path}};

  std::vector<DyckStep> steps(path.steps().begin(), path.steps().end());
  steps[mk.x_point] = DyckStep::Down;
  steps[mk.rightmost_max] = DyckStep::Up;
  const auto cut = static_cast<std::ptrdiff_t>(mk.x_point + 1);
  DyckPair pair{DyckPath({steps.begin(), steps.begin() + cut}),
                DyckPath({steps.begin() + cut, steps.end()})};
  detail::expect(pair.first, family::Dyck{}, "to_pair");
  detail::expect(pair.second, family::Dyck{}, "to_pair");
  return {std::move(pair)};
}

/// Inverse of to_pair.
inline DyckPath from_pair(const DyckPair& pair) {
  detail::require_dyck(pair.first, "from_pair");
  detail::require_dyck(pair.second, "from_pair");
  if (pair.first.empty() && pair.second.empty()) {
    throw std::invalid_argument("from_pair: both components empty");
  }
  const int h1 = pair.first.height();
  const int h2 = pair.second.height();
  if (h1 - h2 > 1 || h2 - h1 > 1) {
    throw std::invalid_argument("from_pair: height difference |" + std::to_string(h1) + " - " +
                                std::to_string(h2) + "| > 1");
  }
  if (pair.first.empty()) return pair.second;
  if (pair.second.empty()) return pair.first;

  std::vector<DyckStep> steps(pair.first.steps().begin(), pair.first.steps().end());
  const std::size_t y = steps.size();
  steps.insert(steps.end(), pair.second.steps().begin(), pair.second.steps().end());
  const std::size_t l = y + detail::leftmost_max(pair.second.levels());
  steps[y - 1] = DyckStep::Up;
  steps[l - 1] = DyckStep::Down;
  DyckPath result(std::move(steps));
  detail::expect(result, family::Dyck{}, "from_pair");
  return result;
}

}  // namespace supercat

#endif  // SUPERCAT_BIJECTIONS_HPP
