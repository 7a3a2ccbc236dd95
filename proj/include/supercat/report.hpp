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

#ifndef SUPERCAT_REPORT_HPP
#define SUPERCAT_REPORT_HPP

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace supercat {

struct CheckFailure {
  std::string params;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

/// Outcome of an identity check over a parameter range. passed() is true
/// exactly when no failure was recorded.
class VerificationReport {
 public:
  VerificationReport() = default;
  VerificationReport(std::string identity, std::string range)
      : identity_(std::move(identity)), range_(std::move(range)) {}

  const std::string& identity() const noexcept { return identity_; }
  const std::string& range() const noexcept { return range_; }
  const std::vector<CheckFailure>& failures() const noexcept { return failures_; }
  /// Informational lines, e.g. per-parameter counts.
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  std::size_t checks() const noexcept { return checks_; }
  bool passed() const noexcept { return failures_.empty(); }

  void check(bool ok, std::string params, std::string lhs, std::string rhs) {
    ++checks_;
    if (!ok) failures_.push_back({std::move(params), std::move(lhs), std::move(rhs)});
  }
  void fail(std::string params, std::string lhs, std::string rhs) {
    check(false, std::move(params), std::move(lhs), std::move(rhs));
  }
  void note(std::string line) { notes_.push_back(std::move(line)); }

  /// Appends another report's checks, failures and notes.
  void absorb(const VerificationReport& other) {
    checks_ += other.checks_;
    failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
    notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
  }

 private:
  std::string identity_;
  std::string range_;
  std::vector<CheckFailure> failures_;
  std::vector<std::string> notes_;
  std::size_t checks_ = 0;
};

/// "(a,b,...)" rendering of a parameter tuple.
template <class... Args>
std::string params(const Args&... args) {
  std::ostringstream os;
  os << '(';
  const char* sep = "";
  ((os << sep << args, sep = ","), ...);
  os << ')';
  return os.str();
}

}  // namespace supercat

#endif  // SUPERCAT_REPORT_HPP
