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

// Acceptance suite. Prints one PASS/FAIL line per criterion; exits nonzero
// if any criterion fails. All checks are exact and single-threaded; the
// time limits below are part of the criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercat/supercat.hpp"

namespace {

using namespace supercat;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome from_report(const VerificationReport& rep) {
  Outcome o;
  o.ok = rep.passed();
  std::ostringstream os;
  os << rep.identity() << ": " << rep.checks() << " checks";
  if (!rep.passed()) {
    const auto& f = rep.failures().front();
    os << ", first failure " << f.params << " " << f.lhs << " vs " << f.rhs;
  }
  o.detail = os.str();
  return o;
}

Outcome all_of(std::initializer_list<Outcome> parts) {
  Outcome o;
  for (const auto& p : parts) {
    o.ok = o.ok && p.ok;
    o.detail += (o.detail.empty() ? "" : "; ") + p.detail;
  }
  return o;
}

// 1. Signed count at (2,3): P(2,3) = 10, N(2,3) = 4, difference T(2,3) = 6.
Outcome signed_two_three() {
  const SignedCount c = signed_count(2, 3);
  Outcome o;
  o.ok = c.positive == 10 && c.negative == 4 && c.difference() == 6 &&
         super_catalan_T(2, 3) == 6;
  o.detail = "P=" + c.positive.str() + " N=" + c.negative.str() + " T(2,3)=" +
             super_catalan_T(2, 3).str();
  return o;
}

// 6. Bounded-rise census, plus the exact membership list at n = 3.
Outcome bounded_rise() {
  Outcome census = from_report(verify_theorem4(10));
  std::multiset<std::string> got;
  for (const auto& p : theorem4_members(3)) got.insert(to_string(p));
  const std::multiset<std::string> want{"UDUDUD", "UDUDUD", "UUDDUD",
                                        "UDUUDD", "UUDUDD", "UUUDDD"};
  Outcome list{got == want, "n=3 members " + std::string(got == want ? "match" : "differ")};
  return all_of({census, list});
}

// 11. S(m,n) even off the origin, and T(0,0) is a domain error.
Outcome parity() {
  Outcome o = from_report(verify_parity(100));
  try {
    (void)super_catalan_T(0, 0);
    o.ok = false;
    o.detail += "; T(0,0) returned a value";
  } catch (const std::domain_error& e) {
    o.detail += std::string("; T(0,0): ") + e.what();
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 for no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Signed count: P(2,3)=10, N(2,3)=4, T(2,3)=6", 1.0, signed_two_three},
      {2, "Signed count P-N = T for m+n <= 14", 60.0,
       [] { return from_report(verify_theorem1(14)); }},
      {3, "Dyck mod-4 reformulation, m+n <= 12", 0.0,
       [] { return from_report(verify_theorem1_dyck(12)); }},
      {4, "Rubenstein recurrence, 1 <= m,n <= 50", 1.0,
       [] { return from_report(verify_rubenstein(50, 50)); }},
      {5, "Ballot-sum identity with termwise agreement, m,n <= 30", 1.0,
       [] { return from_report(verify_ballot_sum(30, 30)); }},
      {6, "Bounded-rise census = T(2,n), n <= 10", 0.0, bounded_rise},
      {7, "Height-balanced pair count = T(2,n), n <= 9", 0.0,
       [] { return from_report(verify_pairs(9)); }},
      {8, "f and g round trips and image complements, n <= 8", 0.0,
       [] {
         return all_of({from_report(verify_bijection_f(8)), from_report(verify_bijection_g(8))});
       }},
      {9, "Pair map mutually inverse with heights (h-, h+ - 1), n <= 8", 0.0,
       [] { return from_report(verify_pair_map(8)); }},
      {10, "Weight-preserving reversal m+n <= 12; T symmetric m+n <= 100", 0.0,
       [] {
         return all_of({from_report(verify_reversal(12)), from_report(verify_symmetry(100))});
       }},
      {11, "S(m,n) even for (m,n) != (0,0), m+n <= 100; T(0,0) rejected", 0.0, parity},
      {12, "|D_n| = C_n, |M_k| = C_{k+1} (<= 12), |ballot(n,r)| = B(n,r) (n <= 10)", 0.0,
       [] { return from_report(verify_counts(12)); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.ok = false;
      o.detail += "; exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    if (!o.ok) ++failed;
    std::printf("[%s] criterion %2d  %-70s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                secs, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
