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

#include "supercat/bijections.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "supercat/verify.hpp"

namespace supercat {
namespace {

std::string s(const DyckPath& p) { return to_string(p); }
std::string s(const TwoMotzkinPath& p) { return to_string(p); }

// ---------------------------------------------------------------------------
// Motzkin <-> Dyck

TEST(MotzkinToDyck, Examples) {
  EXPECT_EQ(s(motzkin_to_dyck(parse_motzkin(""))), "UD");
  EXPECT_EQ(s(motzkin_to_dyck(parse_motzkin("S"))), "UUDD");
  EXPECT_EQ(s(motzkin_to_dyck(parse_motzkin("W"))), "UDUD");
  EXPECT_THROW(motzkin_to_dyck(parse_motzkin("D")), std::invalid_argument);
}

TEST(DyckToMotzkin, Examples) {
  EXPECT_EQ(s(dyck_to_motzkin(parse_dyck("UD"))), "");
  EXPECT_EQ(s(dyck_to_motzkin(parse_dyck("UUDD"))), "S");
  EXPECT_THROW(dyck_to_motzkin(parse_dyck("")), std::invalid_argument);
  EXPECT_THROW(dyck_to_motzkin(parse_dyck("DU")), std::invalid_argument);
}

TEST(MotzkinDyck, RoundTripIsBijection) {
  for (std::size_t k = 0; k <= 7; ++k) {
    std::set<std::string> image;
    for (auto gen = enum_motzkin2(k); !gen.done(); gen.advance()) {
      const DyckPath d = motzkin_to_dyck(gen.current());
      ASSERT_EQ(dyck_to_motzkin(d), gen.current());
      image.insert(s(d));
    }
    std::set<std::string> all;
    for (const auto& w : oracle::brute_force(2 * k + 2, 0, "UD")) all.insert(w);
    EXPECT_EQ(image, all) << k;
  }
}

// ---------------------------------------------------------------------------
// Weights and signed counts

TEST(Weight, Examples) {
  EXPECT_EQ(weight(parse_motzkin("SUD"), 2), 1);
  EXPECT_EQ(weight(parse_motzkin("UDS"), 2), -1);
  for (auto gen = enum_motzkin2(5); !gen.done(); gen.advance()) {
    ASSERT_EQ(weight(gen.current(), 1), 1);
  }
  EXPECT_THROW(weight(parse_motzkin("S"), 3), std::invalid_argument);
  EXPECT_THROW(weight(parse_motzkin("S"), 0), std::invalid_argument);
  // n = 1: the path has length m-1 and the point x = m-1 is its end.
  EXPECT_EQ(weight(parse_motzkin("UD"), 3), 1);
}

// Oracle: tally brute-force words directly.
SignedCount brute_signed_count(std::size_t m, std::size_t n) {
  SignedCount c{0, 0};
  for (const auto& w : oracle::brute_force(m + n - 2, 0, "UDSW")) {
    if (oracle::levels_of(w)[m - 1] % 2 == 0) c.positive += 1;
    else c.negative += 1;
  }
  return c;
}

TEST(SignedCount, TwoThreeValues) {
  const SignedCount c = signed_count(2, 3);
  EXPECT_EQ(c.positive, 10);
  EXPECT_EQ(c.negative, 4);
  EXPECT_EQ(c.difference(), 6);
}

TEST(SignedCount, FirstRowHasNoNegatives) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const SignedCount c = signed_count(1, n);
    EXPECT_EQ(c.negative, 0);
    EXPECT_EQ(c.positive, catalan(n));
  }
}

TEST(SignedCount, MatchesBruteForceAndFormula) {
  for (std::size_t m = 1; m <= 6; ++m) {
    for (std::size_t n = 1; m + n <= 9; ++n) {
      const SignedCount c = signed_count(m, n);
      EXPECT_EQ(c, brute_signed_count(m, n)) << m << "," << n;
      EXPECT_EQ(c.difference(), super_catalan_T(m, n));
    }
  }
  EXPECT_EQ(signed_count(3, 2).difference(), 6);
}

TEST(SignedCount, ParallelAgreesWithSerial) {
  EXPECT_EQ(signed_count(4, 7, 4), signed_count(4, 7, 1));
  EXPECT_EQ(signed_count_dyck(3, 6, 3), signed_count_dyck(3, 6, 1));
}

TEST(SignedCountDyck, Examples) {
  SignedCount c = signed_count_dyck(2, 3);
  EXPECT_EQ(c.positive, 10);
  EXPECT_EQ(c.negative, 4);
  c = signed_count_dyck(1, 2);
  EXPECT_EQ(c.positive, 2);
  EXPECT_EQ(c.negative, 0);
}

TEST(SignedCountDyck, LevelCorrespondenceUnderBijection) {
  for (std::size_t len = 0; len <= 8; ++len) {
    for (auto gen = enum_motzkin2(len); !gen.done(); gen.advance()) {
      const DyckPath d = motzkin_to_dyck(gen.current());
      for (std::size_t m = 1; m <= len + 1; ++m) {
        ASSERT_EQ(d.level_at(2 * m - 1), 2 * gen.current().level_at(m - 1) + 1);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Start classes

TEST(ClassifyStart, Examples) {
  EXPECT_EQ(classify_start(parse_dyck("UDUUDD")), StartClass::A);
  EXPECT_EQ(classify_start(parse_dyck("UUDDUD")), StartClass::B);
  EXPECT_EQ(classify_start(parse_dyck("UUUDDDUD")), StartClass::NStar);
  EXPECT_EQ(classify_start(parse_dyck("UUUDDUUDDD")), StartClass::NStarStar);
  EXPECT_EQ(classify_start(parse_dyck("DUUDDU")), StartClass::Other);
  EXPECT_THROW(classify_start(parse_dyck("UUDD")), std::invalid_argument);
}

TEST(ClassifyStart, PartitionAndContraction) {
  for (std::size_t n = 2; n <= 8; ++n) {
    std::set<std::string> a, b;
    for (auto gen = enum_dyck(n + 1); !gen.done(); gen.advance()) {
      const StartClass c = classify_start(gen.current());
      ASSERT_NE(c, StartClass::Other);
      if (c == StartClass::A) a.insert(s(contract_second_third(gen.current())));
      if (c == StartClass::B) b.insert(s(contract_second_third(gen.current())));
    }
    std::set<std::string> dn;
    for (auto gen = enum_dyck(n); !gen.done(); gen.advance()) dn.insert(s(gen.current()));
    EXPECT_EQ(a, dn);
    EXPECT_EQ(b, dn);
  }
}

// ---------------------------------------------------------------------------
// f

TEST(InjectionF, Examples) {
  EXPECT_EQ(s(injection_f(parse_dyck("UUUDDDUD"))), "UUDDUD");
  EXPECT_EQ(s(injection_f_inverse(parse_dyck("UUDDUD"))), "UUUDDDUD");
  EXPECT_THROW(injection_f_inverse(parse_dyck("UDUDUD")), std::domain_error);
  try {
    injection_f(parse_dyck("UDUDUD"));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("not in N*"), std::string::npos);
  }
  EXPECT_THROW(injection_f(parse_dyck("UUUDDUUDDD")), std::invalid_argument);
}

TEST(InjectionF, LeftmostMaxOfImageIsQ) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (auto gen = enum_dyck(n + 1); !gen.done(); gen.advance()) {
      if (classify_start(gen.current()) != StartClass::NStar) continue;
      const std::size_t r = markers(gen.current()).rightmost_max;
      const DyckPath q = injection_f(gen.current());
      EXPECT_EQ(markers(q).leftmost_max, r - 1);
      EXPECT_GE(q.height(), 2);
    }
  }
}

TEST(InjectionF, NStarHasCatalanMinusOne) {
  for (std::size_t n = 2; n <= 8; ++n) {
    std::size_t count = 0;
    for (auto gen = enum_dyck(n + 1); !gen.done(); gen.advance()) {
      if (classify_start(gen.current()) == StartClass::NStar) ++count;
    }
    EXPECT_EQ(ExactInt(count), catalan(n) - 1);
  }
}

TEST(InjectionF, ExhaustiveRoundTrip) { EXPECT_TRUE(verify_bijection_f(8).passed()); }

// ---------------------------------------------------------------------------
// g

TEST(InjectionG, Examples) {
  const DyckPath p = parse_dyck("UUUDDUUDDD");
  const BallotPath mid = g_stage_one(p);
  EXPECT_EQ(s(mid), "UUUUUDDD");
  EXPECT_EQ(mid.final_level(), 2);
  EXPECT_EQ(s(injection_g(p)), "UUUUDDDD");
  const auto mk = markers(injection_g(p));
  EXPECT_EQ(mk.h_plus, 4);
  EXPECT_EQ(mk.h_minus, 1);

  EXPECT_EQ(s(injection_g_inverse(parse_dyck("UUUUDDDD"))), "UUUDDUUDDD");
  EXPECT_THROW(injection_g_inverse(parse_dyck("UUDUDD")), std::domain_error);
  EXPECT_THROW(injection_g(parse_dyck("UUUDDDUD")), std::invalid_argument);
}

TEST(InjectionG, StageOneGapAndOutputMarkers) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (auto gen = enum_dyck(n + 1); !gen.done(); gen.advance()) {
      if (classify_start(gen.current()) != StartClass::NStarStar) continue;
      const BallotPath mid = g_stage_one(gen.current());
      ASSERT_TRUE(validate(mid, family::BallotEven{2 * n}));
      const auto lv = oracle::levels_of(s(mid));
      std::size_t x = 0;
      for (std::size_t i = 0; i < lv.size(); ++i) {
        if (lv[i] == 1) x = i;
      }
      int before = 0, after = 0;
      for (std::size_t i = 0; i < lv.size(); ++i) {
        if (i <= x) before = std::max(before, lv[i]);
        if (i >= x) after = std::max(after, lv[i]);
      }
      EXPECT_GE(after, before + 4) << s(mid);

      const DyckPath out = g_stage_two(mid);
      const auto mk = oracle::naive_markers(s(out));
      // X of the output is the last level-one point before its rightmost max,
      // and it is the same point as in the intermediate path.
      EXPECT_EQ(mk.x, x);
      EXPECT_GE(mk.h_plus, mk.h_minus + 3);
    }
  }
}

TEST(InjectionG, ExhaustiveRoundTrip) { EXPECT_TRUE(verify_bijection_g(8).passed()); }

// ---------------------------------------------------------------------------
// Bounded-rise census and the pair map

TEST(BoundedRise, CensusAtThree) {
  std::vector<std::string> got;
  for (const auto& p : theorem4_members(3)) got.push_back(s(p));
  std::multiset<std::string> want{"UDUDUD", "UDUDUD", "UUDDUD", "UDUUDD", "UUDUDD", "UUUDDD"};
  EXPECT_EQ(std::multiset<std::string>(got.begin(), got.end()), want);
  EXPECT_EQ(theorem4_census(3), 6);
}

TEST(BoundedRise, SmallAndFormula) {
  EXPECT_EQ(theorem4_census(1), 2);
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(theorem4_census(n), super_catalan_T(2, n));
  EXPECT_EQ(theorem4_census(9, 3), theorem4_census(9, 1));
}

TEST(BoundedRise, GrandIdentity) {
  for (std::size_t n = 2; n <= 10; ++n) {
    std::size_t ns = 0, nss = 0;
    for (auto gen = enum_dyck(n + 1); !gen.done(); gen.advance()) {
      const auto c = classify_start(gen.current());
      ns += c == StartClass::NStar;
      nss += c == StartClass::NStarStar;
    }
    EXPECT_EQ(2 * catalan(n) - ns - nss, super_catalan_T(2, n)) << n;
  }
}

TEST(ToPair, Examples) {
  auto pairs = to_pair(parse_dyck("UUDUDD"));
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(s(pairs[0].first), "UUDD");
  EXPECT_EQ(s(pairs[0].second), "UD");

  pairs = to_pair(parse_dyck("UUDDUD"));
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(s(pairs[0].first), "UD");
  EXPECT_EQ(s(pairs[0].second), "UDUD");

  pairs = to_pair(parse_dyck("UDUDUD"));
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(s(pairs[0].first), "UDUDUD");
  EXPECT_EQ(s(pairs[0].second), "");
  EXPECT_EQ(s(pairs[1].first), "");
  EXPECT_EQ(s(pairs[1].second), "UDUDUD");

  EXPECT_THROW(to_pair(parse_dyck("UUUUDDDD")), std::invalid_argument);
  EXPECT_THROW(to_pair(parse_dyck("")), std::invalid_argument);
}

TEST(FromPair, Examples) {
  EXPECT_EQ(s(from_pair({parse_dyck("UUDD"), parse_dyck("UD")})), "UUDUDD");
  EXPECT_EQ(s(from_pair({parse_dyck("UDUD"), parse_dyck("")})), "UDUD");
  EXPECT_EQ(s(from_pair({parse_dyck(""), parse_dyck("UDUD")})), "UDUD");
  EXPECT_THROW(from_pair({parse_dyck("UUUDDD"), parse_dyck("UD")}), std::invalid_argument);
  EXPECT_THROW(from_pair({parse_dyck(""), parse_dyck("")}), std::invalid_argument);
  EXPECT_THROW(from_pair({parse_dyck(""), parse_dyck("UUDD")}), std::invalid_argument);
}

TEST(PairMap, LeftmostMaxOfSecondIsL) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& p : theorem4_members(n)) {
      const auto mk = markers(p);
      if (mk.height == 1) continue;
      const auto pair = to_pair(p).front();
      // L sits one step right of R in the original path.
      EXPECT_EQ(pair.first.size() + markers(pair.second).leftmost_max, mk.rightmost_max + 1);
    }
  }
}

TEST(PairMap, ExhaustiveInverse) { EXPECT_TRUE(verify_pair_map(8).passed()); }

TEST(Reversal, PreservesWeight) {
  for (std::size_t len = 0; len <= 8; ++len) {
    for (auto gen = enum_motzkin2(len); !gen.done(); gen.advance()) {
      for (std::size_t m = 1; m <= len + 1; ++m) {
        ASSERT_EQ(weight(gen.current(), m), weight(reverse(gen.current()), len + 2 - m));
      }
    }
  }
}

}  // namespace
}  // namespace supercat
