#include "lmec/channel.hpp"

#include <algorithm>

#include "lmec/distance.hpp"

namespace lmec {

Word apply(const Word& x, const ErrorVector& e, const CodeParams& params) {
  if (x.size() != e.magnitudes.size())
    throw std::invalid_argument("error vector length does not match word length");
  Word out(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    int m = e.magnitudes[i];
    if (m < 0 || m > params.ell)
      throw std::invalid_argument("error magnitude out of [0, ell]");
    int v = e.direction == Direction::Up ? x[i] + m : x[i] - m;
    if (v < 0 || v >= params.q)
      throw OutOfAlphabetError("error pattern leaves the alphabet at coordinate " +
                               std::to_string(i));
    out[i] = v;
  }
  return out;
}

namespace {

// Enumerates x shifted by every magnitude vector with the given sign,
// keeping only in-alphabet outputs.
void collect_shifted(const Word& x, const CodeParams& params, int sign,
                     std::vector<Word>& out) {
  std::vector<int> lo(x.size()), hi(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (sign > 0) {
      lo[i] = x[i];
      hi[i] = std::min(params.q - 1, x[i] + params.ell);
    } else {
      lo[i] = std::max(0, x[i] - params.ell);
      hi[i] = x[i];
    }
  }
  Word w(lo);
  for (;;) {
    out.push_back(w);
    size_t i = w.size();
    while (i > 0) {
      --i;
      if (w[i] < hi[i]) {
        ++w[i];
        for (size_t t = i + 1; t < w.size(); ++t) w[t] = lo[t];
        break;
      }
      if (i == 0) return;
    }
  }
}

}  // namespace

std::vector<Word> reachable(const Word& x, const CodeParams& params, ChannelMode mode) {
  if (!word_in_alphabet(x, params))
    throw std::invalid_argument("word is not over the alphabet");
  std::vector<Word> out;
  collect_shifted(x, params, +1, out);
  if (mode == ChannelMode::Unidirectional) collect_shifted(x, params, -1, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool confusable(const Word& x, const Word& y, const CodeParams& params,
                ChannelMode mode) {
  int d = dmax(x, y);
  if (d <= params.ell) return true;
  if (mode == ChannelMode::Unidirectional)
    return comparable(x, y) && d <= 2 * params.ell;
  return false;
}

uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

ErrorVector sample_error(const CodeParams& params, Direction direction,
                         int max_magnitude, std::mt19937_64& rng) {
  if (max_magnitude < 0 || max_magnitude > params.ell)
    throw std::invalid_argument("max_magnitude must be in [0, ell]");
  ErrorVector e;
  e.direction = direction;
  e.magnitudes.resize(params.n);
  for (int i = 0; i < params.n; ++i)
    e.magnitudes[i] = static_cast<int>(uniform_below(rng, max_magnitude + 1));
  return e;
}

}  // namespace lmec
