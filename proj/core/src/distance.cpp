#include "lmec/distance.hpp"

#include <cstdlib>

namespace lmec {

namespace {

void check_lengths(const Word& x, const Word& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("word length mismatch: " + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()));
}

}  // namespace

int dmax(const Word& x, const Word& y) {
  check_lengths(x, y);
  int d = 0;
  for (size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

bool comparable(const Word& x, const Word& y) {
  check_lengths(x, y);
  bool x_ge = true, y_ge = true;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < y[i]) x_ge = false;
    if (y[i] < x[i]) y_ge = false;
  }
  return x_ge || y_ge;
}

int du(const Word& x, const Word& y) {
  int d = dmax(x, y);
  return comparable(x, y) ? d : 2 * d;
}

bool is_aec(const Codebook& c) {
  for (size_t i = 0; i < c.words.size(); ++i)
    for (size_t j = i + 1; j < c.words.size(); ++j)
      if (dmax(c.words[i], c.words[j]) < c.params.ell + 1) return false;
  return true;
}

bool is_uec(const Codebook& c) {
  for (size_t i = 0; i < c.words.size(); ++i)
    for (size_t j = i + 1; j < c.words.size(); ++j)
      if (du(c.words[i], c.words[j]) < 2 * c.params.ell + 1) return false;
  return true;
}

bool is_ued(const Codebook& c) {
  for (size_t i = 0; i < c.words.size(); ++i)
    for (size_t j = i + 1; j < c.words.size(); ++j) {
      const Word& x = c.words[i];
      const Word& y = c.words[j];
      if (comparable(x, y) && dmax(x, y) < c.params.ell + 1) return false;
    }
  return true;
}

}  // namespace lmec
