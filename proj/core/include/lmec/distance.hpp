#pragma once

#include "lmec/types.hpp"

namespace lmec {

// Maximum absolute coordinate difference.
int dmax(const Word& x, const Word& y);

// True iff x >= y coordinatewise or y >= x coordinatewise.
bool comparable(const Word& x, const Word& y);

// dmax for comparable pairs, 2*dmax for incomparable ones. Not a metric:
// du((0,2),(1,0)) = 4 > du((0,2),(1,2)) + du((1,2),(1,0)) = 1 + 2.
int du(const Word& x, const Word& y);

// Pairwise validity criteria. A codebook corrects all asymmetric level-ell
// errors iff dmax >= ell+1 on every pair; corrects all unidirectional ones iff
// du >= 2*ell+1; detects all unidirectional ones iff every pair is either
// incomparable or at dmax >= ell+1.
bool is_aec(const Codebook& c);
bool is_uec(const Codebook& c);
bool is_ued(const Codebook& c);

}  // namespace lmec
