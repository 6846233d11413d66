#pragma once

#include <gmpxx.h>

#include "lmec/types.hpp"

namespace lmec::uec {

// Scaled-sum level maximizing the constant-sum code size: floor(n(b-1)/2).
long long jstar(const CodeParams& params);

// Number of words of Q_{ell+1}^n whose coordinate sum is j*(ell+1), i.e. of
// n-tuples over [0, b-1] summing to j. Zero outside [0, n(b-1)].
mpz_class count_constant_sum(const CodeParams& params, long long j);

// All words of Q_{ell+1}^n with scaled coordinate sum j.
Codebook build_constant_sum(const CodeParams& params, long long j);

// The code {0, 2*ell+1}^n; needs q >= 2*ell+2. Size 2^n, which is optimal at
// q = 2*ell+2.
Codebook build_two_level(const CodeParams& params);

// Sum-window code: data words of Q_{ell+1}^n whose sum lies in [s1, s2]
// (mean +- two standard deviations, clamped to the achievable range), each
// extended by an m-symbol tail encoding s2 - sum in big-endian base q. The
// tail reverses the order of sums, so comparable data parts get incomparable
// extensions.
struct TailCodeSpec {
  CodeParams params;
  long long s1, s2;  // inclusive window on the data coordinate sum
  int m;             // tail length, ceil(log_q(s2-s1+1))
};

TailCodeSpec tail_spec(const CodeParams& params);

// Tail symbols of the codeword whose data part sums to s.
Word tail_of(const TailCodeSpec& spec, long long s);

// Builds the full code of length n+m. At least 3/4 of b^n data words survive
// the window cut.
Codebook build_tail_code(const CodeParams& params);

// Decoders. Each forms the two candidates obtained by rounding the data
// coordinates down (error was upward) or up (downward) to the code's
// coordinate alphabet, keeps the candidates consistent with the side
// information, and fails if none survives.
Word decode_constant_sum(const CodeParams& params, long long j, const Word& y);
Word decode_two_level(const CodeParams& params, const Word& y);
Word decode_tail(const CodeParams& params, const Word& y);

// Membership decoder for an explicit codebook: the unique codeword that can
// reach y under the codebook's mode (Aec: y-x in [0,ell]^n; Uec: comparable
// with dmax <= ell). Throws DecodeFailure if no codeword, or more than one,
// explains y.
Word decode_codebook(const Codebook& c, const Word& y);

}  // namespace lmec::uec
