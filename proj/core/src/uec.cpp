#include "lmec/uec.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "lmec/counting.hpp"
#include "lmec/distance.hpp"

namespace lmec::uec {

namespace {

// Exact test 2k - n(b-1)(ell+1) <= 2*sigma*sqrt(n) against the squared form;
// 12*sigma^2*n is the integer n*(ell+1)^2*(b^2-1), so both window bounds are
// decided without floating point.
bool within_upper(const CodeParams& p, long long k) {
  __int128 T = 2 * static_cast<__int128>(k) -
               static_cast<__int128>(p.n) * (p.b() - 1) * (p.ell + 1);
  if (T <= 0) return true;
  __int128 rhs = static_cast<__int128>(4) * p.n * (p.ell + 1) * (p.ell + 1) *
                 (static_cast<__int128>(p.b()) * p.b() - 1);
  return 3 * T * T <= rhs;
}

bool within_lower(const CodeParams& p, long long k) {
  __int128 T = static_cast<__int128>(p.n) * (p.b() - 1) * (p.ell + 1) -
               2 * static_cast<__int128>(k);
  if (T <= 0) return true;
  __int128 rhs = static_cast<__int128>(4) * p.n * (p.ell + 1) * (p.ell + 1) *
                 (static_cast<__int128>(p.b()) * p.b() - 1);
  return 3 * T * T <= rhs;
}

// Emits, in lexicographic order, every word over {0, step, 2*step, ...,
// (levels-1)*step} of the given length whose scaled digit sum lies in
// [jlo, jhi].
void collect_sum_words(int length, int levels, int step, long long jlo, long long jhi,
                       const std::function<void(const Word&)>& emit) {
  Word w(length);
  auto rec = [&](auto&& self, int i, long long sum) -> void {
    if (i == length) {
      emit(w);
      return;
    }
    long long rest = static_cast<long long>(length - i - 1) * (levels - 1);
    for (int d = 0; d < levels; ++d) {
      long long s = sum + d;
      if (s > jhi) break;              // digits only grow the sum
      if (s + rest < jlo) continue;    // even maxed-out suffix falls short
      w[i] = d * step;
      self(self, i + 1, s);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

long long jstar(const CodeParams& params) {
  return static_cast<long long>(params.n) * (params.b() - 1) / 2;
}

mpz_class count_constant_sum(const CodeParams& params, long long j) {
  if (j < 0 || j > static_cast<long long>(params.n) * (params.b() - 1)) return 0;
  return uniform_sum_table(params.b(), params.n).at(j);
}

Codebook build_constant_sum(const CodeParams& params, long long j) {
  std::vector<Word> words;
  collect_sum_words(params.n, params.b(), params.ell + 1, j, j,
                    [&](const Word& w) { words.push_back(w); });
  return Codebook{params, Mode::Uec, std::move(words)};
}

Codebook build_two_level(const CodeParams& params) {
  int high = 2 * params.ell + 1;
  if (params.q < high + 1)
    throw std::invalid_argument("two-level code needs q >= 2*ell+2");
  if (params.n > 24)
    throw ResourceCapError("two-level code materialization is capped at n <= 24");
  std::vector<Word> words;
  for (long long mask = 0; mask < (1LL << params.n); ++mask) {
    Word w(params.n);
    for (int i = 0; i < params.n; ++i)
      w[i] = (mask >> (params.n - 1 - i)) & 1 ? high : 0;
    words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  return Codebook{params, Mode::Uec, std::move(words)};
}

TailCodeSpec tail_spec(const CodeParams& params) {
  long long max_sum =
      static_cast<long long>(params.n) * (params.b() - 1) * (params.ell + 1);
  // Smallest k with k >= n*mu - 2*sigma*sqrt(n); the predicate is monotone.
  long long lo = 0, hi = max_sum;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (within_lower(params, mid)) hi = mid; else lo = mid + 1;
  }
  long long s1 = lo;
  // Largest k with k <= n*mu + 2*sigma*sqrt(n).
  lo = s1; hi = max_sum;
  while (lo < hi) {
    long long mid = lo + (hi - lo + 1) / 2;
    if (within_upper(params, mid)) lo = mid; else hi = mid - 1;
  }
  long long s2 = lo;
  long long window = s2 - s1 + 1;
  // Smallest m with q^m >= window; the saturating step avoids overflow.
  int m = 0;
  for (long long reach = 1; reach < window; ++m)
    reach = reach > window / params.q ? window : reach * params.q;
  return TailCodeSpec{params, s1, s2, m};
}

Word tail_of(const TailCodeSpec& spec, long long s) {
  if (s < spec.s1 || s > spec.s2)
    throw std::invalid_argument("sum outside the code's window");
  long long v = spec.s2 - s;
  Word tail(spec.m);
  for (int i = spec.m - 1; i >= 0; --i) {
    tail[i] = static_cast<int>(v % spec.params.q);
    v /= spec.params.q;
  }
  return tail;
}

Codebook build_tail_code(const CodeParams& params) {
  TailCodeSpec spec = tail_spec(params);
  int step = params.ell + 1;
  // Data sums are multiples of ell+1; translate the window to digit sums.
  long long jlo = (spec.s1 + step - 1) / step;
  long long jhi = spec.s2 / step;
  std::vector<Word> words;
  collect_sum_words(params.n, params.b(), step, jlo, jhi, [&](const Word& w) {
    long long s = 0;
    for (int v : w) s += v;
    Word full = w;
    Word tail = tail_of(spec, s);
    full.insert(full.end(), tail.begin(), tail.end());
    words.push_back(full);
  });
  CodeParams out_params(params.q, params.ell, params.n + spec.m);
  return Codebook{out_params, Mode::Uec, std::move(words)};
}

namespace {

// Largest alphabet multiple of ell+1 at distance <= ell below y_i. Always
// exists: the gap is y_i mod (ell+1).
int round_down_coord(int y, int step) { return y / step * step; }

// Smallest multiple of ell+1 at distance <= ell above y_i, or nullopt when it
// would leave the alphabet.
std::optional<int> round_up_coord(int y, int step, int q) {
  int v = (y + step - 1) / step * step;
  if (v > q - 1) return std::nullopt;
  return v;
}

Word require_one(std::optional<Word> up, std::optional<Word> down) {
  if (up && down) {
    if (*up != *down)
      throw DecodeFailure("received word is explained by two distinct codewords");
    return *up;
  }
  if (up) return *up;
  if (down) return *down;
  throw DecodeFailure("received word is outside the error model for this code");
}

}  // namespace

Word decode_constant_sum(const CodeParams& params, long long j, const Word& y) {
  if (!word_in_alphabet(y, params))
    throw std::invalid_argument("received word is not over the alphabet");
  int step = params.ell + 1;
  std::optional<Word> up_cand, down_cand;
  {
    Word x(y.size());
    long long sum = 0;
    for (size_t i = 0; i < y.size(); ++i) {
      x[i] = round_down_coord(y[i], step);
      sum += x[i];
    }
    if (sum == j * step) up_cand = std::move(x);
  }
  {
    Word x(y.size());
    long long sum = 0;
    bool ok = true;
    for (size_t i = 0; i < y.size() && ok; ++i) {
      auto v = round_up_coord(y[i], step, params.q);
      if (!v) ok = false;
      else { x[i] = *v; sum += *v; }
    }
    if (ok && sum == j * step) down_cand = std::move(x);
  }
  return require_one(std::move(up_cand), std::move(down_cand));
}

Word decode_two_level(const CodeParams& params, const Word& y) {
  if (!word_in_alphabet(y, params))
    throw std::invalid_argument("received word is not over the alphabet");
  int high = 2 * params.ell + 1;
  if (params.q < high + 1)
    throw std::invalid_argument("two-level code needs q >= 2*ell+2");
  std::optional<Word> up_cand{Word(y.size())}, down_cand{Word(y.size())};
  for (size_t i = 0; i < y.size(); ++i) {
    if (up_cand) {
      if (y[i] >= high && y[i] - high <= params.ell) (*up_cand)[i] = high;
      else if (y[i] <= params.ell) (*up_cand)[i] = 0;
      else up_cand.reset();
    }
    if (down_cand) {
      if (y[i] == 0) (*down_cand)[i] = 0;
      else if (y[i] <= high && high - y[i] <= params.ell) (*down_cand)[i] = high;
      else down_cand.reset();
    }
    if (!up_cand && !down_cand) break;
  }
  return require_one(std::move(up_cand), std::move(down_cand));
}

Word decode_tail(const CodeParams& params, const Word& y) {
  TailCodeSpec spec = tail_spec(params);
  CodeParams full_params(params.q, params.ell, params.n + spec.m);
  if (!word_in_alphabet(y, full_params))
    throw std::invalid_argument("received word must have length n+m over the alphabet");
  int step = params.ell + 1;
  auto candidate = [&](bool upward) -> std::optional<Word> {
    Word x(params.n);
    long long sum = 0;
    for (int i = 0; i < params.n; ++i) {
      if (upward) {
        x[i] = round_down_coord(y[i], step);
      } else {
        auto v = round_up_coord(y[i], step, params.q);
        if (!v) return std::nullopt;
        x[i] = *v;
      }
      sum += x[i];
    }
    if (sum < spec.s1 || sum > spec.s2) return std::nullopt;
    Word tail = tail_of(spec, sum);
    for (int j = 0; j < spec.m; ++j) {
      int diff = upward ? y[params.n + j] - tail[j] : tail[j] - y[params.n + j];
      if (diff < 0 || diff > params.ell) return std::nullopt;
    }
    x.insert(x.end(), tail.begin(), tail.end());
    return x;
  };
  return require_one(candidate(true), candidate(false));
}

Word decode_codebook(const Codebook& c, const Word& y) {
  if (c.mode == Mode::Ued)
    throw std::invalid_argument("detection-only codebooks do not decode");
  if (!word_in_alphabet(y, c.params))
    throw std::invalid_argument("received word is not over the alphabet");
  const Word* found = nullptr;
  for (const Word& x : c.words) {
    bool explains;
    if (c.mode == Mode::Aec) {
      explains = true;
      for (size_t i = 0; i < y.size() && explains; ++i) {
        int e = y[i] - x[i];
        explains = e >= 0 && e <= c.params.ell;
      }
    } else {
      explains = comparable(x, y) && dmax(x, y) <= c.params.ell;
    }
    if (explains) {
      if (found)
        throw DecodeFailure("received word is explained by two distinct codewords");
      found = &x;
    }
  }
  if (!found)
    throw DecodeFailure("received word is outside the error model for this code");
  return *found;
}

}  // namespace lmec::uec
