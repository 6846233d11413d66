#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lmec/types.hpp"

namespace lmec {

enum class Direction { Up, Down };

enum class ChannelMode { Asymmetric, Unidirectional };

// One channel use: per-coordinate magnitudes in [0, ell], all applied with a
// single sign given by direction.
struct ErrorVector {
  std::vector<int> magnitudes;
  Direction direction = Direction::Up;
};

// x + e (Up) or x - e (Down). Throws OutOfAlphabetError if any coordinate
// would leave [0, q-1]: such a pattern cannot occur for this transmitted word.
Word apply(const Word& x, const ErrorVector& e, const CodeParams& params);

// All channel outputs for transmitted x: {x+e} for Asymmetric, the union of
// {x+e} and {x-e} for Unidirectional. Sorted, deduplicated.
std::vector<Word> reachable(const Word& x, const CodeParams& params, ChannelMode mode);

// True iff some channel output is reachable from both x and y. Decided by the
// distance criteria (asymmetric: dmax <= ell; unidirectional: dmax <= ell or
// comparable with dmax <= 2*ell), not by enumerating outputs; the oracle
// cross-checks the two.
bool confusable(const Word& x, const Word& y, const CodeParams& params, ChannelMode mode);

// Uniform draw from [0, bound-1] by rejection on the raw 64-bit stream, so the
// value sequence for a given seed is identical on every platform.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound);

// Magnitudes drawn uniformly from [0, max_magnitude] (clamp to [0, ell]).
ErrorVector sample_error(const CodeParams& params, Direction direction,
                         int max_magnitude, std::mt19937_64& rng);

}  // namespace lmec
