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

#ifndef SUPERCAT_VERIFY_HPP
#define SUPERCAT_VERIFY_HPP

// Exhaustive and formula-level identity suites. Each returns a
// VerificationReport; one check is recorded per parameter tuple (or per
// path, for pathwise properties).

#include <algorithm>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "supercat/bijections.hpp"
#include "supercat/enumerate.hpp"
#include "supercat/numbers.hpp"
#include "supercat/path.hpp"
#include "supercat/report.hpp"

namespace supercat {

/// P(m,n) - N(m,n) = T(m,n) for m, n >= 1, m + n <= max_sum.
inline VerificationReport verify_theorem1(std::size_t max_sum, std::size_t jobs = 1) {
  VerificationReport rep("theorem1", "m,n>=1, m+n<=" + std::to_string(max_sum));
  for (std::size_t s = 2; s <= max_sum; ++s) {
    for (std::size_t m = 1; m < s; ++m) {
      const std::size_t n = s - m;
      const SignedCount c = signed_count(m, n, jobs);
      const ExactInt t = super_catalan_T(m, n);
      rep.check(c.difference() == t, params(m, n), c.difference().str(), t.str());
      rep.check(c.total() == catalan(m + n - 1), params(m, n) + " P+N", c.total().str(),
                catalan(m + n - 1).str());
    }
  }
  return rep;
}

/// The Dyck mod-4 tally agrees with the 2-Motzkin tally, and pathwise the
/// canonical bijection sends level y at point m-1 to level 2y+1 at 2m-1.
inline VerificationReport verify_theorem1_dyck(std::size_t max_sum, std::size_t jobs = 1) {
  VerificationReport rep("theorem1-dyck", "m,n>=1, m+n<=" + std::to_string(max_sum));
  for (std::size_t s = 2; s <= max_sum; ++s) {
    for (std::size_t m = 1; m < s; ++m) {
      const std::size_t n = s - m;
      const SignedCount a = signed_count_dyck(m, n, jobs);
      const SignedCount b = signed_count(m, n, jobs);
      rep.check(a == b, params(m, n),
                a.positive.str() + "/" + a.negative.str(),
                b.positive.str() + "/" + b.negative.str());
    }
  }
  for (std::size_t len = 0; len + 2 <= max_sum; ++len) {
    std::size_t bad = 0;
    for (auto gen = enum_motzkin2(len); !gen.done(); gen.advance()) {
      const TwoMotzkinPath& p = gen.current();
      const DyckPath d = motzkin_to_dyck(p);
      for (std::size_t m = 1; m <= len + 1; ++m) {
        const int expect = 2 * p.level_at(m - 1) + 1;
        const bool sign_ok = (weight(p, m) == 1) == (d.level_at(2 * m - 1) % 4 == 1);
        if (d.level_at(2 * m - 1) != expect || !sign_ok) ++bad;
      }
    }
    rep.check(bad == 0, "pathwise len=" + std::to_string(len), std::to_string(bad),
              "0 mismatches");
  }
  return rep;
}

inline VerificationReport verify_rubenstein(std::size_t max_m, std::size_t max_n) {
  return check_rubenstein(max_m, max_n);
}

inline VerificationReport verify_ballot_sum(std::size_t max_m, std::size_t max_n) {
  VerificationReport rep("ballot-sum", "1<=m<=" + std::to_string(max_m) +
                                           ", 1<=n<=" + std::to_string(max_n));
  for (std::size_t m = 1; m <= max_m; ++m) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      ExactInt sum = 0;
      for (const auto& t : ballot_sum_terms(static_cast<long>(m), static_cast<long>(n))) {
        rep.check(t.product == t.binomial_form, params(m, n, t.r) + " term",
                  t.product.str(), t.binomial_form.str());
        sum += t.product;
      }
      const ExactInt tv = super_catalan_T(m, n);
      rep.check(sum == tv, params(m, n), sum.str(), tv.str());
    }
  }
  return rep;
}

/// T(m,n) = T(n,m) for all (m,n) != (0,0) with m + n <= max_sum.
inline VerificationReport verify_symmetry(std::size_t max_sum) {
  VerificationReport rep("symmetry", "m+n<=" + std::to_string(max_sum));
  for (std::size_t s = 1; s <= max_sum; ++s) {
    for (std::size_t m = 0; m <= s; ++m) {
      const ExactInt a = super_catalan_T(m, s - m);
      const ExactInt b = super_catalan_T(s - m, m);
      rep.check(a == b, params(m, s - m), a.str(), b.str());
    }
  }
  return rep;
}

/// S(m,n) is even off (0,0), and T(0,0) is rejected.
inline VerificationReport verify_parity(std::size_t max_sum) {
  VerificationReport rep("parity", "m+n<=" + std::to_string(max_sum));
  for (std::size_t s = 1; s <= max_sum; ++s) {
    for (std::size_t m = 0; m <= s; ++m) {
      const ExactInt v = super_catalan_S(m, s - m);
      rep.check(v % 2 == 0, params(m, s - m), "S mod 2 = " + ExactInt(v % 2).str(), "0");
    }
  }
  bool rejected = false;
  try {
    (void)super_catalan_T(0, 0);
  } catch (const std::domain_error&) {
    rejected = true;
  }
  rep.check(rejected, "(0,0)", rejected ? "domain error" : "value", "domain error");
  return rep;
}

/// weight(p, m) = weight(reverse(p), n) over 2-Motzkin paths of length m+n-2.
inline VerificationReport verify_reversal(std::size_t max_sum) {
  VerificationReport rep("reversal", "m,n>=1, m+n<=" + std::to_string(max_sum));
  for (std::size_t len = 0; len + 2 <= max_sum; ++len) {
    std::size_t bad = 0;
    for (auto gen = enum_motzkin2(len); !gen.done(); gen.advance()) {
      const TwoMotzkinPath& p = gen.current();
      const TwoMotzkinPath r = reverse(p);
      if (!validate(r, family::Motzkin2{}) || reverse(r) != p) ++bad;
      for (std::size_t m = 1; m <= len + 1; ++m) {
        const std::size_t n = len + 2 - m;
        if (weight(p, m) != weight(r, n)) ++bad;
      }
    }
    rep.check(bad == 0, "len=" + std::to_string(len), std::to_string(bad), "0 mismatches");
  }
  return rep;
}

/// |{h+ <= h- + 2}| + 1 = T(2,n).
inline VerificationReport verify_theorem4(std::size_t max_n, std::size_t jobs = 1) {
  VerificationReport rep("theorem4", "1<=n<=" + std::to_string(max_n));
  for (std::size_t n = 1; n <= max_n; ++n) {
    const ExactInt census = theorem4_census(n, jobs);
    const ExactInt t = super_catalan_T(2, n);
    rep.check(census == t, params(n), census.str(), t.str());
    rep.note("n=" + std::to_string(n) + " census=" + census.str());
  }
  return rep;
}

/// Ordered pairs of Dyck paths of total length 2n with height difference at
/// most one number T(2,n).
inline VerificationReport verify_pairs(std::size_t max_n) {
  VerificationReport rep("pairs", "1<=n<=" + std::to_string(max_n));
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::uint64_t count = 0;
    auto stream = enum_pairs_total(n);
    while (auto pair = stream.next()) {
      const int d = pair->first.height() - pair->second.height();
      if (d >= -1 && d <= 1) ++count;
    }
    const ExactInt t = super_catalan_T(2, n);
    rep.check(ExactInt(count) == t, params(n), std::to_string(count), t.str());
    rep.note("n=" + std::to_string(n) + " pairs=" + std::to_string(count));
  }
  return rep;
}

/// Counts of the enumerated families against their closed forms.
inline VerificationReport verify_counts(std::size_t max_n) {
  VerificationReport rep("counts", "n<=" + std::to_string(max_n));
  for (std::size_t n = 0; n <= max_n; ++n) {
    const auto d = count_paths(enum_dyck(n));
    rep.check(ExactInt(d) == catalan(n), "dyck" + params(n), std::to_string(d),
              catalan(n).str());
    const auto mz = count_paths(enum_motzkin2(n));
    rep.check(ExactInt(mz) == catalan(n + 1), "motzkin2" + params(n), std::to_string(mz),
              catalan(n + 1).str());
  }
  for (int n = 1; n <= static_cast<int>(std::min<std::size_t>(max_n, 10)); ++n) {
    for (int r = 1; r <= n; ++r) {
      const auto b = count_paths(enum_ballot(n, r));
      rep.check(ExactInt(b) == ballot_number(n, r), "ballot" + params(n, r),
                std::to_string(b), ballot_number(n, r).str());
    }
  }
  return rep;
}

/// A/B/N*/N** partition D_{n+1}; |A| = |B| = C_n through the contraction of
/// the second and third steps; 2 C_n - |N*| - |N**| = T(2,n).
inline VerificationReport verify_classes(std::size_t max_n) {
  VerificationReport rep("classes", "2<=n<=" + std::to_string(max_n));
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::uint64_t a = 0, b = 0, ns = 0, nss = 0, other = 0;
    std::set<std::string> a_image, b_image;
    for (auto gen = enum_dyck(n + 1); !gen.done(); gen.advance()) {
      const DyckPath& p = gen.current();
      switch (classify_start(p)) {
        case StartClass::A:
          ++a;
          a_image.insert(to_string(contract_second_third(p)));
          break;
        case StartClass::B:
          ++b;
          b_image.insert(to_string(contract_second_third(p)));
          break;
        case StartClass::NStar: ++ns; break;
        case StartClass::NStarStar: ++nss; break;
        case StartClass::Other: ++other; break;
      }
    }
    const ExactInt cn = catalan(n);
    rep.check(other == 0, params(n) + " other", std::to_string(other), "0");
    rep.check(ExactInt(a) == cn && a_image.size() == a, params(n) + " |A|",
              std::to_string(a) + " (" + std::to_string(a_image.size()) + " distinct)", cn.str());
    rep.check(ExactInt(b) == cn && b_image.size() == b, params(n) + " |B|",
              std::to_string(b) + " (" + std::to_string(b_image.size()) + " distinct)", cn.str());
    const ExactInt lhs = 2 * cn - ns - nss;
    const ExactInt t = super_catalan_T(2, n);
    rep.check(lhs == t, params(n) + " 2C_n-|N*|-|N**|", lhs.str(), t.str());
    rep.note("n=" + std::to_string(n) + " A=" + std::to_string(a) + " B=" + std::to_string(b) +
             " N*=" + std::to_string(ns) + " N**=" + std::to_string(nss));
  }
  return rep;
}

/// f and f^-1 are mutually inverse; f misses exactly the height-one path.
inline VerificationReport verify_bijection_f(std::size_t max_n) {
  VerificationReport rep("bijection-f", "2<=n<=" + std::to_string(max_n));
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::set<std::string> image;
    std::uint64_t domain = 0;
    for (auto gen = enum_dyck(n + 1); !gen.done(); gen.advance()) {
      const DyckPath& p = gen.current();
      if (classify_start(p) != StartClass::NStar) continue;
      ++domain;
      const DyckPath q = injection_f(p);
      const DyckPath back = injection_f_inverse(q);
      rep.check(back == p, "f-1(f(" + to_string(p) + "))", to_string(back), to_string(p));
      image.insert(to_string(q));
    }
    rep.check(image.size() == domain, params(n) + " injective",
              std::to_string(image.size()) + " images", std::to_string(domain) + " paths");
    std::set<std::string> missed;
    for (auto gen = enum_dyck(n); !gen.done(); gen.advance()) {
      const DyckPath& q = gen.current();
      if (q.height() >= 2) {
        const DyckPath back = injection_f(injection_f_inverse(q));
        rep.check(back == q, "f(f-1(" + to_string(q) + "))", to_string(back), to_string(q));
      }
      if (!image.contains(to_string(q))) missed.insert(to_string(q));
    }
    const std::string tau = to_string(height_one_path(n));
    rep.check(missed == std::set<std::string>{tau}, params(n) + " complement",
              std::to_string(missed.size()) + " missed", "only " + tau);
    rep.note("n=" + std::to_string(n) + " |N*|=" + std::to_string(domain));
  }
  return rep;
}

/// g and g^-1 are mutually inverse; g misses exactly {h+ <= h- + 2}; the
/// first stage leaves a gap of at least 4 between the maxima around X.
inline VerificationReport verify_bijection_g(std::size_t max_n) {
  VerificationReport rep("bijection-g", "2<=n<=" + std::to_string(max_n));
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::set<std::string> image;
    std::uint64_t domain = 0;
    for (auto gen = enum_dyck(n + 1); !gen.done(); gen.advance()) {
      const DyckPath& p = gen.current();
      if (classify_start(p) != StartClass::NStarStar) continue;
      ++domain;
      const BallotPath mid = g_stage_one(p);
      const auto lv = mid.levels();
      const std::size_t x = detail::last_level_one_upto(lv, lv.size() - 1);
      const int before = *std::max_element(lv.begin(), lv.begin() + x + 1);
      const int after = *std::max_element(lv.begin() + x, lv.end());
      rep.check(after >= before + 4, "gap(" + to_string(mid) + ")", std::to_string(after),
                ">= " + std::to_string(before + 4));
      const DyckPath q = g_stage_two(mid);
      const PathMarkers mk = markers(q);
      rep.check(mk.h_plus >= mk.h_minus + 3, "h+(g(" + to_string(p) + "))",
                std::to_string(mk.h_plus), ">= " + std::to_string(mk.h_minus + 3));
      const DyckPath back = injection_g_inverse(q);
      rep.check(back == p, "g-1(g(" + to_string(p) + "))", to_string(back), to_string(p));
      image.insert(to_string(q));
    }
    rep.check(image.size() == domain, params(n) + " injective",
              std::to_string(image.size()) + " images", std::to_string(domain) + " paths");
    std::uint64_t bounded = 0, bad_complement = 0;
    for (auto gen = enum_dyck(n); !gen.done(); gen.advance()) {
      const DyckPath& q = gen.current();
      const bool in_image = image.contains(to_string(q));
      if (has_bounded_rise(markers(q))) {
        ++bounded;
        if (in_image) ++bad_complement;
      } else {
        if (!in_image) ++bad_complement;
        const DyckPath back = injection_g(injection_g_inverse(q));
        rep.check(back == q, "g(g-1(" + to_string(q) + "))", to_string(back), to_string(q));
      }
    }
    rep.check(bad_complement == 0, params(n) + " complement", std::to_string(bad_complement),
              "0 paths misplaced");
    rep.check(ExactInt(domain + bounded) == catalan(n), params(n) + " |N**|+bounded",
              std::to_string(domain + bounded), catalan(n).str());
    rep.note("n=" + std::to_string(n) + " |N**|=" + std::to_string(domain));
  }
  return rep;
}

/// to_pair and from_pair are mutually inverse, heights go to (h-, h+ - 1),
/// and the image is exactly the set of ordered pairs counted by T(2,n).
inline VerificationReport verify_pair_map(std::size_t max_n) {
  VerificationReport rep("pair-map", "1<=n<=" + std::to_string(max_n));
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::set<DyckPair> image;
    std::uint64_t mapped = 0;
    for (auto gen = enum_dyck(n); !gen.done(); gen.advance()) {
      const DyckPath& p = gen.current();
      const PathMarkers mk = markers(p);
      if (!has_bounded_rise(mk)) continue;
      for (const DyckPair& pair : to_pair(p)) {
        ++mapped;
        image.insert(pair);
        const DyckPath back = from_pair(pair);
        rep.check(back == p, "unpair(pair(" + to_string(p) + "))", to_string(back),
                  to_string(p));
        if (mk.height > 1) {
          rep.check(pair.first.height() == mk.h_minus &&
                        pair.second.height() == mk.h_plus - 1,
                    "heights(" + to_string(p) + ")",
                    params(pair.first.height(), pair.second.height()),
                    params(mk.h_minus, mk.h_plus - 1));
        }
      }
    }
    std::set<DyckPair> expected;
    auto stream = enum_pairs_total(n);
    while (auto pair = stream.next()) {
      const int d = pair->first.height() - pair->second.height();
      if (d < -1 || d > 1) continue;
      expected.insert(*pair);
      const auto round = to_pair(from_pair(*pair));
      const bool found = std::find(round.begin(), round.end(), *pair) != round.end();
      rep.check(found, "pair(unpair(" + to_string(pair->first) + "," +
                           to_string(pair->second) + "))",
                found ? "present" : "absent", "present");
    }
    rep.check(image.size() == mapped && image == expected, params(n) + " image",
              std::to_string(image.size()) + " distinct of " + std::to_string(mapped),
              std::to_string(expected.size()) + " pairs");
    const ExactInt t = super_catalan_T(2, n);
    rep.check(ExactInt(mapped) == t, params(n) + " count", std::to_string(mapped), t.str());
    rep.note("n=" + std::to_string(n) + " pairs=" + std::to_string(mapped));
  }
  return rep;
}

}  // namespace supercat

#endif  // SUPERCAT_VERIFY_HPP
