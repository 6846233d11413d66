#include "lmec/aec.hpp"

namespace lmec::aec {

mpz_class capacity(const CodeParams& params) {
  mpz_class c;
  mpz_ui_pow_ui(c.get_mpz_t(), static_cast<unsigned long>(params.b()),
                static_cast<unsigned long>(params.n));
  return c;
}

Word encode(const std::vector<int>& message, const CodeParams& params) {
  if (static_cast<int>(message.size()) != params.n)
    throw std::invalid_argument("message length must equal n");
  Word w(message.size());
  for (size_t i = 0; i < message.size(); ++i) {
    if (message[i] < 0 || message[i] >= params.b())
      throw std::invalid_argument("message digit out of [0, b-1]");
    w[i] = message[i] * (params.ell + 1);
  }
  return w;
}

Word decode(const Word& y, const CodeParams& params) {
  if (!word_in_alphabet(y, params))
    throw std::invalid_argument("received word is not over the alphabet");
  Word x(y.size());
  for (size_t i = 0; i < y.size(); ++i)
    x[i] = y[i] / (params.ell + 1) * (params.ell + 1);
  return x;
}

void for_each_codeword(const CodeParams& params,
                       const std::function<void(const Word&)>& visit) {
  int step = params.ell + 1;
  int top = (params.b() - 1) * step;
  Word w(params.n, 0);
  for (;;) {
    visit(w);
    int i = params.n;
    while (i > 0) {
      --i;
      if (w[i] < top) {
        w[i] += step;
        for (int t = i + 1; t < params.n; ++t) w[t] = 0;
        break;
      }
      if (i == 0) return;
    }
  }
}

Codebook build(const CodeParams& params, long long max_words) {
  if (capacity(params) > static_cast<long>(max_words))
    throw ResourceCapError("code has " + capacity(params).get_str() +
                           " words, materialization cap is " + std::to_string(max_words));
  std::vector<Word> words;
  words.reserve(static_cast<size_t>(capacity(params).get_si()));
  for_each_codeword(params, [&](const Word& w) { words.push_back(w); });
  return Codebook{params, Mode::Aec, std::move(words)};
}

}  // namespace lmec::aec
