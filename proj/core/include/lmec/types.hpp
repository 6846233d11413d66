#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lmec {

// A symbol is a value in [0, q-1]; q is capped at 2^16 so every distance and
// coordinate computation fits comfortably in int.
using Symbol = int;
using Word = std::vector<Symbol>;

constexpr int kMaxAlphabet = 1 << 16;

// Thrown when an error pattern would push a symbol outside [0, q-1].
struct OutOfAlphabetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a received word cannot be explained by any codeword under the
// channel model (or the side information is inconsistent).
struct DecodeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a computation would exceed a configured size guard
// (generating-function degree, oracle vertex count, materialization size).
struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CodeParams {
  int q;    // alphabet size, [2, 2^16]
  int ell;  // error level, [1, q-2]
  int n;    // code length, >= 1

  CodeParams(int q_, int ell_, int n_);

  // Number of residue levels: |Q_{ell+1}| = ceil(q / (ell+1)).
  int b() const { return (q + ell) / (ell + 1); }

  bool operator==(const CodeParams&) const = default;
};

enum class Mode { Aec, Uec, Ued };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& name);

struct Codebook {
  CodeParams params;
  Mode mode;
  std::vector<Word> words;  // lexicographically sorted, no duplicates
};

// Sorts, deduplicates, and validates the words against params.
Codebook make_codebook(const CodeParams& params, Mode mode, std::vector<Word> words);

bool word_in_alphabet(const Word& w, const CodeParams& params);

}  // namespace lmec
