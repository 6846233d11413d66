#include "lmec/counting.hpp"

#include <cstdlib>
#include <numeric>

namespace lmec {

namespace {

const mpz_class kZero = 0;

// Multiplies cur (dense, degrees 0..cur.size()-1) by
// 1 + x^p + x^{2p} + ... + x^{(q-1)p} using running window sums along each
// residue class mod p: one addition and one subtraction per output term.
std::vector<mpz_class> multiply_uniform(const std::vector<mpz_class>& cur,
                                        long long p, int q) {
  long long old_len = static_cast<long long>(cur.size());
  long long new_len = old_len + (static_cast<long long>(q) - 1) * p;
  std::vector<mpz_class> next(static_cast<size_t>(new_len));
  for (long long s = 0; s < p && s < new_len; ++s) {
    mpz_class window = 0;
    long long k = 0;
    for (long long e = s; e < new_len; e += p, ++k) {
      if (s + k * p < old_len) window += cur[static_cast<size_t>(s + k * p)];
      long long drop = k - q;
      if (drop >= 0 && s + drop * p < old_len)
        window -= cur[static_cast<size_t>(s + drop * p)];
      next[static_cast<size_t>(e)] = window;
    }
  }
  return next;
}

}  // namespace

const mpz_class& CountTable::at(long long e) const {
  long long k = e - offset;
  if (k < 0 || k >= static_cast<long long>(counts.size())) return kZero;
  return counts[static_cast<size_t>(k)];
}

mpz_class CountTable::total() const {
  mpz_class t = 0;
  for (const mpz_class& c : counts) t += c;
  return t;
}

CountTable uniform_sum_table(int radix, int n, long long degree_cap) {
  if (radix < 1 || n < 0) throw std::invalid_argument("uniform_sum_table: bad arguments");
  long long width = static_cast<long long>(radix - 1) * n + 1;
  if (width > degree_cap)
    throw ResourceCapError("sum table needs " + std::to_string(width) +
                           " coefficients, cap is " + std::to_string(degree_cap));
  CountTable t;
  t.counts.assign(1, 1);
  for (int i = 0; i < n; ++i) t.counts = multiply_uniform(t.counts, 1, radix);
  return t;
}

CountTable value_distribution(int q, const std::vector<long long>& coeffs,
                              long long degree_cap) {
  if (q < 2) throw std::invalid_argument("value_distribution: q must be >= 2");
  long long width = 1;
  long long offset = 0;
  for (long long a : coeffs) {
    if (a == 0) throw std::invalid_argument("value_distribution: zero coefficient");
    if (std::llabs(a) > degree_cap / (q - 1))
      throw ResourceCapError("value table would exceed the degree cap of " +
                             std::to_string(degree_cap) + " coefficients");
    long long span = std::llabs(a) * (q - 1);
    if (width > degree_cap - span)
      throw ResourceCapError("value table would exceed the degree cap of " +
                             std::to_string(degree_cap) + " coefficients");
    width += span;
    if (a < 0) offset += a * (q - 1);
  }
  // A factor with negative a contributes exponents a*(q-1)..0; shifting it by
  // |a|*(q-1) turns it into the same uniform ladder with a positive stride,
  // accumulated into the table offset.
  CountTable t;
  t.offset = offset;
  t.counts.assign(1, 1);
  for (long long a : coeffs) t.counts = multiply_uniform(t.counts, std::llabs(a), q);
  return t;
}

long long residue_count(long long q, long long f, long long e) {
  if (f < 1 || e < 0 || e >= f) throw std::invalid_argument("residue_count: need 0 <= e < f");
  return q / f + (e < q % f ? 1 : 0);
}

}  // namespace lmec
