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

#ifndef SUPERCAT_NUMBERS_HPP
#define SUPERCAT_NUMBERS_HPP

// Exact closed forms: factorials, binomials, Catalan and ballot numbers,
// the super Catalan numbers S(m,n) = (2m)!(2n)!/(m!n!(m+n)!) and
// T(m,n) = S(m,n)/2, and the alternating ballot-product sum for T(m,n).
//
// Every quotient goes through exact_div, which refuses to truncate.

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "supercat/report.hpp"

namespace supercat {

using ExactInt = boost::multiprecision::cpp_int;

/// num / den, throwing std::logic_error if the division is not exact.
inline ExactInt exact_div(const ExactInt& num, const ExactInt& den, const char* what = "") {
  if (den == 0) throw std::logic_error(std::string("division by zero in ") + what);
  ExactInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw std::logic_error(std::string("non-integral quotient in ") + what + ": " +
                           num.str() + " / " + den.str());
  }
  return q;
}

/// n!, memoized in a process-wide table guarded by a mutex.
inline ExactInt factorial(std::size_t n) {
  static std::mutex mu;
  static std::vector<ExactInt> table{1};
  std::lock_guard lock(mu);
  while (table.size() <= n) table.push_back(table.back() * table.size());
  return table[n];
}

/// C(n, k); zero outside 0 <= k <= n.
inline ExactInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  const auto un = static_cast<std::size_t>(n);
  const auto uk = static_cast<std::size_t>(k);
  return exact_div(factorial(un), factorial(uk) * factorial(un - uk), "binomial");
}

inline ExactInt catalan(std::size_t n) {
  const long ln = static_cast<long>(n);
  return exact_div(binomial(2 * ln, ln), ln + 1, "catalan");
}

/// S(m,n), computed as C(2m,m) C(2n,n) / C(m+n,n).
inline ExactInt super_catalan_S(std::size_t m, std::size_t n) {
  const long lm = static_cast<long>(m);
  const long ln = static_cast<long>(n);
  return exact_div(binomial(2 * lm, lm) * binomial(2 * ln, ln), binomial(lm + ln, ln),
                   "super_catalan_S");
}

inline ExactInt super_catalan_T(std::size_t m, std::size_t n) {
  if (m == 0 && n == 0) throw std::domain_error("T(0,0) is not integral");
  return exact_div(super_catalan_S(m, n), 2, "super_catalan_T");
}

/// B(n,r) = (r/n) C(2n, n+r): nonnegative paths from the origin to (2n-1, 2r-1).
inline ExactInt ballot_number(long n, long r) {
  if (n < 1 || r < 1 || r > n) {
    throw std::invalid_argument("ballot_number: need 1 <= r <= n, got n=" + std::to_string(n) +
                                ", r=" + std::to_string(r));
  }
  return exact_div(r * binomial(2 * n, n + r), n, "ballot_number");
}

/// One summand r of the alternating ballot sum, in both printed forms:
/// product = (-1)^(r-1) B(m,r) B(n,r) and
/// binomial_form = (-1)^(r-1) r^2/(mn) C(2m,m+r) C(2n,n+r).
struct BallotSumTerm {
  long r = 0;
  ExactInt product;
  ExactInt binomial_form;
};

/// Summands r = 1..min(m,n); the sum vanishes termwise beyond that.
inline std::vector<BallotSumTerm> ballot_sum_terms(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("ballot_sum_terms: need m, n >= 1");
  std::vector<BallotSumTerm> terms;
  for (long r = 1; r <= std::min(m, n); ++r) {
    const int sign = (r % 2 == 1) ? 1 : -1;
    BallotSumTerm t;
    t.r = r;
    t.product = sign * ballot_number(m, r) * ballot_number(n, r);
    t.binomial_form = sign * exact_div(ExactInt(r * r) * binomial(2 * m, m + r) *
                                           binomial(2 * n, n + r),
                                       ExactInt(m) * n, "ballot_sum_terms");
    terms.push_back(std::move(t));
  }
  return terms;
}

/// Sum over r of (-1)^(r-1) B(m,r) B(n,r); equals T(m,n).
inline ExactInt ballot_sum_identity(long m, long n) {
  ExactInt sum = 0;
  for (const auto& t : ballot_sum_terms(m, n)) {
    if (t.product != t.binomial_form) {
      throw std::logic_error("ballot sum forms disagree at r=" + std::to_string(t.r));
    }
    sum += t.product;
  }
  return sum;
}

/// 4T(m,n) = T(m+1,n) + T(m,n+1) over 1 <= m <= max_m, 1 <= n <= max_n.
inline VerificationReport check_rubenstein(std::size_t max_m, std::size_t max_n) {
  VerificationReport rep("rubenstein", "1<=m<=" + std::to_string(max_m) +
                                           ", 1<=n<=" + std::to_string(max_n));
  for (std::size_t m = 1; m <= max_m; ++m) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      const ExactInt lhs = 4 * super_catalan_T(m, n);
      const ExactInt rhs = super_catalan_T(m + 1, n) + super_catalan_T(m, n + 1);
      rep.check(lhs == rhs, params(m, n), lhs.str(), rhs.str());
    }
  }
  return rep;
}

}  // namespace supercat

#endif  // SUPERCAT_NUMBERS_HPP
