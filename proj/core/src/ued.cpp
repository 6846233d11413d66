#include "lmec/ued.hpp"

#include <algorithm>
#include <set>

#include "lmec/counting.hpp"

namespace lmec::ued {

namespace {

// Lexicographic DFS over words of Q^n with coordinate sum in [lo, hi].
void collect_layers(const CodeParams& params, long long lo, long long hi,
                    long long modulus, long long residue, std::vector<Word>& out) {
  Word w(params.n);
  auto rec = [&](auto&& self, int i, long long sum) -> void {
    if (i == params.n) {
      if (sum >= lo && sum <= hi && (modulus == 0 || sum % modulus == residue))
        out.push_back(w);
      return;
    }
    long long rest = static_cast<long long>(params.n - i - 1) * (params.q - 1);
    for (int x = 0; x < params.q; ++x) {
      long long s = sum + x;
      if (s > hi) break;
      if (s + rest < lo) continue;
      w[i] = x;
      self(self, i + 1, s);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

Codebook build_pi(const CodeParams& params, long long i) {
  std::vector<Word> words;
  if (i >= 0 && i <= static_cast<long long>(params.n) * (params.q - 1))
    collect_layers(params, i, i, 0, 0, words);
  return Codebook{params, Mode::Ued, std::move(words)};
}

mpz_class count_pi(const CodeParams& params, long long i) {
  if (i < 0 || i > static_cast<long long>(params.n) * (params.q - 1)) return 0;
  return uniform_sum_table(params.q, params.n).at(i);
}

std::vector<mpz_class> pi_sequence(const CodeParams& params) {
  return uniform_sum_table(params.q, params.n).counts;
}

Codebook build_ca(const CodeParams& params, long long a) {
  long long modulus = static_cast<long long>(params.ell) * params.n + 1;
  if (a < 0 || a >= modulus)
    throw std::invalid_argument("layer class must be in [0, ell*n]");
  std::vector<Word> words;
  collect_layers(params, 0, static_cast<long long>(params.n) * (params.q - 1),
                 modulus, a, words);
  return Codebook{params, Mode::Ued, std::move(words)};
}

mpz_class ca_size(const CodeParams& params, long long a) {
  long long modulus = static_cast<long long>(params.ell) * params.n + 1;
  if (a < 0 || a >= modulus)
    throw std::invalid_argument("layer class must be in [0, ell*n]");
  CountTable t = uniform_sum_table(params.q, params.n);
  mpz_class total = 0;
  for (long long i = a; i < static_cast<long long>(t.counts.size()); i += modulus)
    total += t.counts[static_cast<size_t>(i)];
  return total;
}

std::pair<long long, mpz_class> best_ca(const CodeParams& params) {
  long long modulus = static_cast<long long>(params.ell) * params.n + 1;
  long long best_a = 0;
  mpz_class best = ca_size(params, 0);
  for (long long a = 1; a < modulus; ++a) {
    mpz_class s = ca_size(params, a);
    if (s > best) {
      best = std::move(s);
      best_a = a;
    }
  }
  return {best_a, best};
}

bool detects_all(const Codebook& c) {
  std::set<Word> members(c.words.begin(), c.words.end());
  const CodeParams& p = c.params;
  std::vector<int> mag(p.n);
  for (const Word& x : c.words) {
    auto rec = [&](auto&& self, int i, bool nonzero, int sign) -> bool {
      // true means a nonzero pattern lands on another codeword
      if (i == p.n) {
        if (!nonzero) return false;
        Word y(p.n);
        for (int t = 0; t < p.n; ++t) y[t] = x[t] + sign * mag[t];
        return members.count(y) != 0;
      }
      for (int m = 0; m <= p.ell; ++m) {
        int v = x[i] + sign * m;
        if (v < 0 || v >= p.q) break;
        mag[i] = m;
        if (self(self, i + 1, nonzero || m != 0, sign)) return true;
      }
      return false;
    };
    if (rec(rec, 0, false, +1) || rec(rec, 0, false, -1)) return false;
  }
  return true;
}

}  // namespace lmec::ued
