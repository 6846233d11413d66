#include "lmec/types.hpp"

#include <algorithm>

namespace lmec {

CodeParams::CodeParams(int q_, int ell_, int n_) : q(q_), ell(ell_), n(n_) {
  if (q < 2 || q > kMaxAlphabet)
    throw std::invalid_argument("alphabet size q must be in [2, 65536], got " +
                                std::to_string(q));
  // ell = 0 would make every code valid; ell >= q-1 leaves a single codeword.
  if (ell < 1 || ell > q - 2)
    throw std::invalid_argument("error level ell must be in [1, q-2], got " +
                                std::to_string(ell));
  if (n < 1)
    throw std::invalid_argument("code length n must be >= 1, got " + std::to_string(n));
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Aec: return "aec";
    case Mode::Uec: return "uec";
    case Mode::Ued: return "ued";
  }
  throw std::invalid_argument("unknown mode");
}

Mode parse_mode(const std::string& name) {
  if (name == "aec") return Mode::Aec;
  if (name == "uec") return Mode::Uec;
  if (name == "ued") return Mode::Ued;
  throw std::invalid_argument("unknown mode '" + name + "' (expected aec, uec or ued)");
}

bool word_in_alphabet(const Word& w, const CodeParams& params) {
  if (static_cast<int>(w.size()) != params.n) return false;
  return std::all_of(w.begin(), w.end(),
                     [&](Symbol s) { return s >= 0 && s < params.q; });
}

Codebook make_codebook(const CodeParams& params, Mode mode, std::vector<Word> words) {
  for (const Word& w : words) {
    if (!word_in_alphabet(w, params))
      throw std::invalid_argument("codebook word is not a length-" +
                                  std::to_string(params.n) + " word over [0, " +
                                  std::to_string(params.q - 1) + "]");
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return Codebook{params, mode, std::move(words)};
}

}  // namespace lmec
