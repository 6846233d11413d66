#pragma once

#include <gmpxx.h>

#include <vector>

#include "lmec/types.hpp"

namespace lmec {

// Coefficient vector of an integer polynomial. counts[k] is the coefficient
// of x^(offset + k); offset is negative when some generating factor carries
// negative exponents.
struct CountTable {
  long long offset = 0;
  std::vector<mpz_class> counts;

  long long min_exponent() const { return offset; }
  long long max_exponent() const {
    return offset + static_cast<long long>(counts.size()) - 1;
  }
  // Coefficient at exponent e; zero outside the stored range.
  const mpz_class& at(long long e) const;
  mpz_class total() const;
};

// Dense product degree guard. Counting refuses to allocate tables larger than
// this many coefficients unless the caller raises the cap.
constexpr long long kDefaultDegreeCap = 10'000'000;

// Coefficients of (1 + x + ... + x^{radix-1})^n: the number of n-tuples over
// [0, radix-1] with a given sum. Exact, arbitrary precision.
CountTable uniform_sum_table(int radix, int n, long long degree_cap = kDefaultDegreeCap);

// Coefficients of prod_i (1 + x^{a_i} + x^{2 a_i} + ... + x^{(q-1) a_i}) for
// nonzero integer coefficients a_i: the number of words of Q^n reaching each
// value sum a_i * x_i. Negative coefficients shift the offset below zero.
CountTable value_distribution(int q, const std::vector<long long>& coeffs,
                              long long degree_cap = kDefaultDegreeCap);

// |{x in [0, q-1] : x == e (mod f)}| for 0 <= e < f.
long long residue_count(long long q, long long f, long long e);

}  // namespace lmec
