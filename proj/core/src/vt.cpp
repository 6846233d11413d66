#include "lmec/vt.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace lmec::vt {

namespace {

constexpr long long kArithLimit = 1LL << 61;

void check_range(__int128 v, const char* what) {
  if (v > kArithLimit || v < -static_cast<__int128>(kArithLimit))
    throw ResourceCapError(std::string(what) + " exceeds 63-bit arithmetic");
}

long long checked(__int128 v, const char* what) {
  check_range(v, what);
  return static_cast<long long>(v);
}

// min/max of a*x over x in [lo, hi].
long long term_min(long long a, int lo, int hi) { return a < 0 ? a * hi : a * lo; }
long long term_max(long long a, int lo, int hi) { return a < 0 ? a * lo : a * hi; }

}  // namespace

LinearCode::LinearCode(CodeParams p, std::vector<long long> c, long long a)
    : params(p), coeffs(std::move(c)), constant(a) {
  if (static_cast<int>(coeffs.size()) != params.n)
    throw std::invalid_argument("coefficient count must equal n");
  __int128 span = 0;
  for (long long ai : coeffs) {
    if (ai == 0) throw std::invalid_argument("coefficients must be nonzero");
    span += static_cast<__int128>(std::llabs(ai)) * (params.q - 1);
  }
  check_range(span, "coefficient value range");
  check_range(constant, "constant");
}

PowerCodeSpec::PowerCodeSpec(CodeParams p, long long offset) : params(p), r(offset) {
  S();  // validates that the powers stay within machine range
}

long long PowerCodeSpec::S() const {
  __int128 s = 0, p = 1;
  for (int i = 0; i < params.n; ++i) {
    s += p;
    p *= params.ell + 1;
    check_range(s * (params.q - 1), "power coefficient range");
  }
  return static_cast<long long>(s);
}

std::vector<long long> PowerCodeSpec::coeffs() const {
  std::vector<long long> c(params.n);
  long long p = 1;
  for (int i = 0; i < params.n; ++i) {
    c[i] = p;
    if (i + 1 < params.n) p = checked(static_cast<__int128>(p) * (params.ell + 1),
                                      "power coefficient");
  }
  return c;
}

PowerCodeSpec PowerCodeSpec::from_constant(const CodeParams& p, long long a) {
  PowerCodeSpec spec(p, 0);
  spec.r = checked(static_cast<__int128>(a) -
                   static_cast<__int128>(spec.alpha()) * spec.S(), "offset");
  return spec;
}

LinearCode PowerCodeSpec::to_linear() const {
  return LinearCode(params, coeffs(), constant());
}

Codebook enumerate(const LinearCode& code) {
  int n = code.params.n, q = code.params.q;
  // minsuf[i] / maxsuf[i]: achievable range of the suffix starting at i.
  std::vector<long long> minsuf(n + 1, 0), maxsuf(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    minsuf[i] = minsuf[i + 1] + term_min(code.coeffs[i], 0, q - 1);
    maxsuf[i] = maxsuf[i + 1] + term_max(code.coeffs[i], 0, q - 1);
  }
  std::vector<Word> words;
  Word w(n);
  auto rec = [&](auto&& self, int i, long long partial) -> void {
    long long need = code.constant - partial;
    if (need < minsuf[i] || need > maxsuf[i]) return;
    if (i == n) {
      words.push_back(w);
      return;
    }
    for (int x = 0; x < q; ++x) {
      w[i] = x;
      self(self, i + 1, partial + code.coeffs[i] * x);
    }
  };
  rec(rec, 0, 0);
  return Codebook{code.params, Mode::Uec, std::move(words)};
}

namespace {

// Does any nonzero v with lo <= v_i <= hi satisfy sum coeffs[i]*v_i == 0?
bool exists_nonzero_zero_sum(const std::vector<long long>& coeffs, int lo, int hi) {
  int n = static_cast<int>(coeffs.size());
  std::vector<long long> minsuf(n + 1, 0), maxsuf(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    minsuf[i] = minsuf[i + 1] + term_min(coeffs[i], lo, hi);
    maxsuf[i] = maxsuf[i + 1] + term_max(coeffs[i], lo, hi);
  }
  auto rec = [&](auto&& self, int i, long long partial, bool nonzero) -> bool {
    long long need = -partial;
    if (need < minsuf[i] || need > maxsuf[i]) return false;
    if (i == n) return nonzero && partial == 0;
    for (int v = lo; v <= hi; ++v)
      if (self(self, i + 1, partial + coeffs[i] * v, nonzero || v != 0)) return true;
    return false;
  };
  return rec(rec, 0, 0, false);
}

}  // namespace

bool is_uec_hyperplane(const std::vector<long long>& coeffs, int ell) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  for (long long a : coeffs)
    if (a == 0) throw std::invalid_argument("coefficients must be nonzero");
  return !exists_nonzero_zero_sum(coeffs, -ell, ell) &&
         !exists_nonzero_zero_sum(coeffs, 0, 2 * ell);
}

std::pair<Word, ErrorVector> decode_power(const Word& y, const PowerCodeSpec& spec) {
  const CodeParams& p = spec.params;
  if (!word_in_alphabet(y, p))
    throw std::invalid_argument("received word is not over the alphabet");
  long long base = p.ell + 1;
  __int128 received = 0, power = 1;
  for (int i = 0; i < p.n; ++i) {
    received += power * y[i];
    power *= base;
  }
  __int128 diff = received - spec.constant();
  bool upward = diff >= 0;
  __int128 mag = upward ? diff : -diff;
  if (mag >= power)
    throw DecodeFailure("syndrome outside the single-error range");
  ErrorVector e;
  e.direction = upward ? Direction::Up : Direction::Down;
  e.magnitudes.resize(p.n);
  Word x(p.n);
  for (int i = 0; i < p.n; ++i) {
    int digit = static_cast<int>(mag % base);
    mag /= base;
    e.magnitudes[i] = digit;
    x[i] = upward ? y[i] - digit : y[i] + digit;
    if (x[i] < 0 || x[i] >= p.q)
      throw DecodeFailure("corrected symbol leaves the alphabet");
  }
  return {std::move(x), std::move(e)};
}

LinearCode aec_to_uec(const LinearCode& code) {
  long long neg_sum = 0;
  std::vector<long long> coeffs = code.coeffs;
  for (long long& a : coeffs) {
    if (a < 0) {
      neg_sum += a;
      a = -a;
    }
  }
  long long constant =
      checked(static_cast<__int128>(code.constant) -
              static_cast<__int128>(neg_sum) * (code.params.q - 1), "constant");
  return LinearCode(code.params, std::move(coeffs), constant);
}

CongruenceCode congruence_variant(const LinearCode& code) {
  long long S = 0;
  for (long long a : code.coeffs) {
    if (a <= 0)
      throw std::invalid_argument("congruence form needs all-positive coefficients");
    S += a;
  }
  long long modulus = checked(2 * static_cast<__int128>(code.params.ell) * S + 1,
                              "congruence modulus");
  return CongruenceCode{code.params, code.coeffs, code.constant, modulus};
}

Codebook enumerate(const CongruenceCode& code) {
  long long max_value = 0;
  for (long long a : code.coeffs) max_value += a * (code.params.q - 1);
  long long target = code.constant % code.modulus;
  if (target < 0) target += code.modulus;
  std::vector<Word> words;
  for (long long t = target; t <= max_value; t += code.modulus) {
    Codebook slice = enumerate(LinearCode(code.params, code.coeffs, t));
    words.insert(words.end(), slice.words.begin(), slice.words.end());
  }
  std::sort(words.begin(), words.end());
  return Codebook{code.params, Mode::Uec, std::move(words)};
}

namespace {

bool has_solution(const LinearCode& code) {
  int n = code.params.n, q = code.params.q;
  std::vector<long long> minsuf(n + 1, 0), maxsuf(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    minsuf[i] = minsuf[i + 1] + term_min(code.coeffs[i], 0, q - 1);
    maxsuf[i] = maxsuf[i + 1] + term_max(code.coeffs[i], 0, q - 1);
  }
  auto rec = [&](auto&& self, int i, long long partial) -> bool {
    long long need = code.constant - partial;
    if (need < minsuf[i] || need > maxsuf[i]) return false;
    if (i == n) return true;
    for (int x = 0; x < q; ++x)
      if (self(self, i + 1, partial + code.coeffs[i] * x)) return true;
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace

LinearCode direct_product(const LinearCode& a, const LinearCode& b) {
  if (a.params.q != b.params.q || a.params.ell != b.params.ell)
    throw std::invalid_argument("direct product needs matching q and ell");
  if (!has_solution(a) || !has_solution(b))
    throw std::invalid_argument("direct product needs nonempty factors");
  __int128 span = 0;
  for (long long ai : a.coeffs) span += static_cast<__int128>(std::llabs(ai));
  long long M = checked(span * (a.params.q - 1) + 1, "product scale");
  std::vector<long long> coeffs = a.coeffs;
  for (long long bi : b.coeffs)
    coeffs.push_back(checked(static_cast<__int128>(M) * bi, "product coefficient"));
  long long constant = checked(
      static_cast<__int128>(a.constant) + static_cast<__int128>(M) * b.constant,
      "product constant");
  CodeParams p(a.params.q, a.params.ell, a.params.n + b.params.n);
  return LinearCode(p, std::move(coeffs), constant);
}

namespace {

struct GammaMemo {
  std::map<std::pair<int, long long>, mpz_class> values;
  std::vector<long long> S;  // S[k] for k = 0..n

  GammaMemo(const CodeParams& p) {
    S.resize(p.n + 1);
    __int128 s = 0, pw = 1;
    for (int k = 0; k <= p.n; ++k) {
      S[k] = checked(s, "offset range");
      check_range(s * (p.q - 1), "offset range");
      s += pw;
      pw *= p.ell + 1;
    }
  }
};

const mpz_class& gamma_level(const CodeParams& p, int k, long long r, GammaMemo& memo) {
  static const mpz_class zero = 0, one = 1;
  if (k == 0) return r == 0 ? one : zero;
  long long alpha = (p.q - 1) / 2;
  // The equation's constant alpha*S_k + r must be an achievable value.
  if (r < -alpha * memo.S[k] || r > (p.q - 1 - alpha) * memo.S[k]) return zero;
  auto it = memo.values.find({k, r});
  if (it != memo.values.end()) return it->second;
  int base = p.ell + 1;
  long long residue = (alpha + r) % base;
  if (residue < 0) residue += base;
  mpz_class total = 0;
  for (long long x0 = residue; x0 < p.q; x0 += base)
    total += gamma_level(p, k - 1, (alpha + r - x0) / base, memo);
  return memo.values.emplace(std::make_pair(k, r), std::move(total)).first->second;
}

}  // namespace

mpz_class gamma(const CodeParams& params, long long r) {
  GammaMemo memo(params);
  return gamma_level(params, params.n, r, memo);
}

std::vector<mpz_class> gamma_sequence(const CodeParams& params, long long r) {
  GammaMemo memo(params);
  std::vector<mpz_class> seq(params.n + 1);
  for (int k = 0; k <= params.n; ++k) seq[k] = gamma_level(params, k, r, memo);
  return seq;
}

CountTable gamma_table(const CodeParams& params, long long degree_cap) {
  std::vector<long long> coeffs(params.n);
  __int128 p = 1;
  for (int i = 0; i < params.n; ++i) {
    if (p > degree_cap)
      throw ResourceCapError("count table would exceed the degree cap of " +
                             std::to_string(degree_cap) + " coefficients");
    coeffs[i] = static_cast<long long>(p);
    p *= params.ell + 1;
  }
  return value_distribution(params.q, coeffs, degree_cap);
}

std::pair<mpz_class, std::vector<long long>> gamma_max(const CodeParams& params,
                                                       long long degree_cap) {
  CountTable t = gamma_table(params, degree_cap);
  long long shift = PowerCodeSpec(params, 0).alpha() * PowerCodeSpec(params, 0).S();
  mpz_class best = 0;
  for (const mpz_class& c : t.counts) best = std::max(best, c);
  std::vector<long long> offsets;
  for (size_t k = 0; k < t.counts.size(); ++k)
    if (t.counts[k] == best) offsets.push_back(static_cast<long long>(k) - shift);
  return {best, offsets};
}

std::optional<Window> optimal_window(const CodeParams& params) {
  long long alpha = (params.q - 1) / 2;
  int base = params.ell + 1;
  if (params.q % base == 0) {
    __int128 u = -alpha, v = alpha;
    for (int k = 2; k <= params.n; ++k) {
      u = u * base + alpha;
      v = v * base - alpha;
      check_range(u, "window bound");
    }
    return Window{static_cast<long long>(u), static_cast<long long>(v)};
  }
  // Scan decompositions q = 2m(ell+1) + 2c + 1 + delta, delta ascending then
  // c descending; any decomposition meeting the side conditions is valid.
  for (int delta = 0; delta <= 1; ++delta) {
    for (int c = params.ell; c >= 0; --c) {
      if (2 * c + delta == params.ell) continue;
      int rem = params.q - 2 * c - 1 - delta;
      if (rem < 0 || rem % (2 * base) != 0) continue;
      int m = rem / (2 * base);
      long long eta;
      if (2 * c + delta <= params.ell - 1) {
        eta = 0;
        if (m > c) continue;
      } else {
        eta = (params.ell - delta + 1) / 2;
        if (m > c - 1 - eta) continue;
      }
      __int128 lambda = 0;
      for (int k = 2; k <= params.n; ++k) {
        lambda = lambda * base - eta;
        check_range(lambda * base, "window bound");
      }
      long long u = static_cast<long long>(lambda) * base - c;
      return Window{u, u + params.q % base - 1};
    }
  }
  return std::nullopt;
}

std::pair<mpq_class, mpz_class> la_u_bounds(const CodeParams& params) {
  mpz_class qn, bn, base_n;
  mpz_ui_pow_ui(qn.get_mpz_t(), params.q, params.n);
  mpz_ui_pow_ui(base_n.get_mpz_t(), params.ell + 1, params.n);
  mpz_ui_pow_ui(bn.get_mpz_t(), params.b(), params.n - 1);
  mpq_class lower = mpq_class(params.ell * qn) / mpq_class((params.q - 1) * base_n);
  return {lower, bn};
}

std::pair<long long, mpz_class> best_constant_scan(const CodeParams& params,
                                                   const std::vector<long long>& coeffs,
                                                   long long degree_cap) {
  if (static_cast<int>(coeffs.size()) != params.n)
    throw std::invalid_argument("coefficient count must equal n");
  CountTable t = value_distribution(params.q, coeffs, degree_cap);
  long long lo = t.min_exponent(), hi = t.max_exponent();
  long long best_a = lo;
  mpz_class best = t.counts.front();
  auto closer_to_mid = [&](long long a, long long b) {
    long long da = std::llabs(2 * a - (lo + hi)), db = std::llabs(2 * b - (lo + hi));
    return da != db ? da < db : a < b;
  };
  for (size_t k = 1; k < t.counts.size(); ++k) {
    long long a = lo + static_cast<long long>(k);
    if (t.counts[k] > best || (t.counts[k] == best && closer_to_mid(a, best_a))) {
      best = t.counts[k];
      best_a = a;
    }
  }
  return {best_a, best};
}

bool verify_recurrence(const std::vector<mpz_class>& seq,
                       const std::vector<long long>& rec) {
  size_t order = rec.size();
  if (order == 0 || seq.size() <= order)
    throw std::invalid_argument("sequence must be longer than the recurrence order");
  for (size_t k = order; k < seq.size(); ++k) {
    mpz_class expect = 0;
    for (size_t j = 0; j < order; ++j)
      expect += mpz_class(static_cast<long>(rec[j])) * seq[k - 1 - j];
    if (expect != seq[k]) return false;
  }
  return true;
}

}  // namespace lmec::vt
