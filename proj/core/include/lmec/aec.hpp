#pragma once

#include <gmpxx.h>

#include <functional>

#include "lmec/types.hpp"

namespace lmec::aec {

// Size of the largest code correcting all asymmetric level-ell errors:
// ceil(q/(ell+1))^n. Attained by the words whose coordinates are the
// multiples of ell+1.
mpz_class capacity(const CodeParams& params);

// Maps message digits in [0, b-1] to the codeword (digit * (ell+1))_i.
Word encode(const std::vector<int>& message, const CodeParams& params);

// Rounds every coordinate down to the nearest multiple of ell+1. Total
// function; recovers the codeword from any asymmetric level-ell corruption.
Word decode(const Word& y, const CodeParams& params);

// Visits every codeword in lexicographic order without materializing the set.
void for_each_codeword(const CodeParams& params,
                       const std::function<void(const Word&)>& visit);

// Materializes the codebook; throws ResourceCapError when capacity exceeds
// max_words.
Codebook build(const CodeParams& params, long long max_words = 4'000'000);

}  // namespace lmec::aec
