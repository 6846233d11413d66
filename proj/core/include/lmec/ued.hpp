#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "lmec/types.hpp"

namespace lmec::ued {

// Constant-sum layer: all words of Q^n with coordinate sum i. Any two are
// incomparable, so each layer detects every unidirectional error pattern.
Codebook build_pi(const CodeParams& params, long long i);

mpz_class count_pi(const CodeParams& params, long long i);

// All layer sizes, index 0..n(q-1).
std::vector<mpz_class> pi_sequence(const CodeParams& params);

// Union of the layers with i == a (mod ell*n + 1). Unidirectional level-ell
// errors move the sum by at most ell*n without crossing zero, so they cannot
// map one layer of the union onto another.
Codebook build_ca(const CodeParams& params, long long a);

mpz_class ca_size(const CodeParams& params, long long a);

// The a in [0, ell*n] maximizing |C_a|; smallest a on ties.
std::pair<long long, mpz_class> best_ca(const CodeParams& params);

// Operational check: no codeword plus or minus a nonzero magnitude-ell
// pattern lands on the code. Equivalent to the pairwise criterion; both are
// exercised by the tests.
bool detects_all(const Codebook& c);

}  // namespace lmec::ued
