#include "lmec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "lmec/aec.hpp"
#include "lmec/channel.hpp"
#include "lmec/counting.hpp"
#include "lmec/distance.hpp"
#include "lmec/ued.hpp"
#include "lmec/uec.hpp"
#include "lmec/vt.hpp"

namespace lmec::oracle {

namespace {

bool conflicts(const Word& x, const Word& y, int ell, Mode mode) {
  switch (mode) {
    case Mode::Aec:
      return dmax(x, y) <= ell;
    case Mode::Uec:
      return du(x, y) <= 2 * ell;
    case Mode::Ued:
      return comparable(x, y) && dmax(x, y) <= ell;
  }
  return false;
}

int popcount_all(const std::vector<uint64_t>& bits) {
  int total = 0;
  for (uint64_t w : bits) total += std::popcount(w);
  return total;
}

int first_bit(const std::vector<uint64_t>& bits) {
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) return static_cast<int>(i * 64) + std::countr_zero(bits[i]);
  return -1;
}

void clear_bit(std::vector<uint64_t>& bits, int v) {
  bits[v >> 6] &= ~(uint64_t{1} << (v & 63));
}

bool any_bit(const std::vector<uint64_t>& bits) {
  for (uint64_t w : bits)
    if (w) return true;
  return false;
}

// Branch and bound over the compatibility graph (complement of the conflict
// graph): maximum cliques there are maximum codes. Candidates are greedily
// colored each call; a branch dies once depth + color bound cannot beat the
// incumbent. Vertex order is fixed ascending, so results are deterministic.
class CliqueSolver {
 public:
  explicit CliqueSolver(const ConflictGraph& g) : V_(g.V), W_(g.W) {
    comp_.assign(static_cast<size_t>(V_) * W_, 0);
    for (int v = 0; v < V_; ++v) {
      uint64_t* row = &comp_[static_cast<size_t>(v) * W_];
      const uint64_t* conf = &g.bits[static_cast<size_t>(v) * W_];
      for (int w = 0; w < W_; ++w) row[w] = ~conf[w];
      // mask self and the slack beyond V
      clear_row_bit(row, v);
      for (int t = V_; t < W_ * 64; ++t) clear_row_bit(row, t);
    }
  }

  std::vector<int> maximum() {
    best_.clear();
    current_.clear();
    std::vector<uint64_t> p = full_set();
    expand(p);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

  // True iff some clique of size need lives inside the candidate set.
  bool decide(std::vector<uint64_t> p, int need) {
    if (need <= 0) return true;
    if (popcount_all(p) < need) return false;
    std::vector<int> order, colors;
    color_sort(p, order, colors);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (colors[i] < need) return false;
      int v = order[i];
      std::vector<uint64_t> pv = intersect(p, v);
      if (decide(std::move(pv), need - 1)) return true;
      clear_bit(p, v);
    }
    return false;
  }

  std::vector<uint64_t> full_set() const {
    std::vector<uint64_t> p(W_, 0);
    for (int v = 0; v < V_; ++v) p[v >> 6] |= uint64_t{1} << (v & 63);
    return p;
  }

  std::vector<uint64_t> intersect(const std::vector<uint64_t>& p, int v) const {
    std::vector<uint64_t> out(W_);
    const uint64_t* row = &comp_[static_cast<size_t>(v) * W_];
    for (int w = 0; w < W_; ++w) out[w] = p[w] & row[w];
    return out;
  }

 private:
  static void clear_row_bit(uint64_t* row, int v) {
    row[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  // Greedy coloring: vertices listed class by class, ascending color. The
  // color of the last vertex bounds the clique number of the set.
  void color_sort(const std::vector<uint64_t>& p, std::vector<int>& order,
                  std::vector<int>& colors) const {
    order.clear();
    colors.clear();
    std::vector<uint64_t> uncolored = p;
    std::vector<uint64_t> allowed(W_);
    int color = 0;
    while (any_bit(uncolored)) {
      ++color;
      allowed = uncolored;
      for (int v = first_bit(allowed); v >= 0; v = first_bit(allowed)) {
        clear_bit(allowed, v);
        clear_bit(uncolored, v);
        const uint64_t* row = &comp_[static_cast<size_t>(v) * W_];
        for (int w = 0; w < W_; ++w) allowed[w] &= ~row[w];
        order.push_back(v);
        colors.push_back(color);
      }
    }
  }

  void expand(std::vector<uint64_t>& p) {
    std::vector<int> order, colors;
    color_sort(p, order, colors);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current_.size()) + colors[i] <=
          static_cast<int>(best_.size()))
        return;
      int v = order[i];
      std::vector<uint64_t> pv = intersect(p, v);
      current_.push_back(v);
      if (any_bit(pv))
        expand(pv);
      else if (current_.size() > best_.size())
        best_ = current_;
      current_.pop_back();
      clear_bit(p, v);
    }
  }

  int V_, W_;
  std::vector<uint64_t> comp_;
  std::vector<int> best_;
  std::vector<int> current_;
};

}  // namespace

Word ConflictGraph::word_of(int index) const {
  Word w(params.n);
  for (int i = params.n - 1; i >= 0; --i) {
    w[i] = index % params.q;
    index /= params.q;
  }
  return w;
}

int ConflictGraph::index_of(const Word& w) const {
  int index = 0;
  for (Symbol s : w) index = index * params.q + s;
  return index;
}

int default_cap() {
  if (const char* env = std::getenv("LMEC_ORACLE_CAP")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(std::min(v, long{1} << 30));
  }
  return 20000;
}

ConflictGraph build_conflict_graph(const CodeParams& params, Mode mode, int cap) {
  if (cap < 0) cap = default_cap();
  long long vertices = 1;
  for (int i = 0; i < params.n; ++i) {
    vertices *= params.q;
    if (vertices > cap)
      throw ResourceCapError("search space q^n exceeds the oracle cap of " +
                             std::to_string(cap) + " words");
  }
  ConflictGraph g(params, mode);
  g.V = static_cast<int>(vertices);
  g.W = (g.V + 63) / 64;
  g.bits.assign(static_cast<size_t>(g.V) * g.W, 0);

  std::vector<Word> words(g.V);
  for (int v = 0; v < g.V; ++v) words[v] = g.word_of(v);
  for (int i = 0; i < g.V; ++i)
    for (int j = i + 1; j < g.V; ++j)
      if (conflicts(words[i], words[j], params.ell, mode)) {
        g.bits[static_cast<size_t>(i) * g.W + (j >> 6)] |= uint64_t{1}
                                                           << (j & 63);
        g.bits[static_cast<size_t>(j) * g.W + (i >> 6)] |= uint64_t{1}
                                                           << (i & 63);
      }
  return g;
}

std::pair<long long, Codebook> max_code_exact(const CodeParams& params,
                                              Mode mode, int cap) {
  ConflictGraph g = build_conflict_graph(params, mode, cap);
  CliqueSolver solver(g);
  long long size = static_cast<long long>(solver.maximum().size());

  // Canonical witness: grow the lexicographically least prefix that still
  // extends to the optimum, deciding each extension exactly.
  std::vector<int> prefix;
  std::vector<uint64_t> p = solver.full_set();
  while (static_cast<long long>(prefix.size()) < size) {
    int v = first_bit(p);
    std::vector<uint64_t> pv = solver.intersect(p, v);
    int still_needed = static_cast<int>(size - prefix.size()) - 1;
    if (solver.decide(pv, still_needed)) {
      prefix.push_back(v);
      p = std::move(pv);
    } else {
      clear_bit(p, v);
    }
  }

  std::vector<Word> words;
  words.reserve(prefix.size());
  for (int v : prefix) words.push_back(g.word_of(v));
  return {size, make_codebook(params, mode, std::move(words))};
}

bool verify_correction(const Codebook& c, Mode mode) {
  if (mode == Mode::Ued)
    throw std::invalid_argument(
        "detection mode has no correction guarantee to verify");
  ChannelMode channel =
      mode == Mode::Aec ? ChannelMode::Asymmetric : ChannelMode::Unidirectional;
  std::map<Word, size_t> owner;
  for (size_t idx = 0; idx < c.words.size(); ++idx)
    for (const Word& y : reachable(c.words[idx], c.params, channel)) {
      auto [it, inserted] = owner.emplace(y, idx);
      if (!inserted && it->second != idx) return false;
    }
  return true;
}

bool BoundReport::all_pass() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

BoundReport bound_report(const CodeParams& params, int cap) {
  if (cap < 0) cap = default_cap();
  BoundReport r(params);
  r.aec_capacity = aec::capacity(params);
  auto [lower, upper] = vt::la_u_bounds(params);
  r.linear_lower = lower;
  r.linear_upper = upper;

  if (params.q >= 2 * params.ell + 2) {
    mpz_class two;
    mpz_ui_pow_ui(two.get_mpz_t(), 2, params.n);
    r.size_two_level = two;
  }

  CountTable sums = uniform_sum_table(params.b(), params.n);
  r.size_constant_sum = sums.at(uec::jstar(params));

  uec::TailCodeSpec tail = uec::tail_spec(params);
  long long step = params.ell + 1;
  long long jlo = (tail.s1 + step - 1) / step;
  long long jhi = tail.s2 / step;
  mpz_class tail_size = 0;
  for (long long j = jlo; j <= jhi; ++j) tail_size += sums.at(j);
  r.size_tail = tail_size;
  r.tail_length = params.n + tail.m;

  auto [gamma_best, offsets] = vt::gamma_max(params);
  r.size_gamma_best = gamma_best;
  r.gamma_best_offset = offsets.front();

  auto [best_a, best_size] = ued::best_ca(params);
  r.best_ca_class = best_a;
  r.size_best_ca = best_size;

  long long vertices = 1;
  bool fits = true;
  for (int i = 0; i < params.n && fits; ++i) {
    vertices *= params.q;
    if (vertices > cap) fits = false;
  }
  if (fits) {
    r.exact_aec = max_code_exact(params, Mode::Aec, cap).first;
    r.exact_uec = max_code_exact(params, Mode::Uec, cap).first;
    r.exact_ued = max_code_exact(params, Mode::Ued, cap).first;
  }

  auto check = [&r](const std::string& name, bool ok) {
    r.checks.emplace_back(name, ok);
  };
  if (r.exact_aec)
    check("aec_capacity_matches_search",
          r.aec_capacity == mpz_class(static_cast<long>(*r.exact_aec)));
  if (r.exact_aec && r.exact_uec)
    check("uec_at_most_aec", *r.exact_uec <= *r.exact_aec);
  if (r.exact_uec) {
    check("uec_within_aec_capacity", mpz_class(static_cast<long>(*r.exact_uec)) <= r.aec_capacity);
    if (r.size_two_level)
      check("two_level_within_search",
            *r.size_two_level <= mpz_class(static_cast<long>(*r.exact_uec)));
    check("constant_sum_within_search",
          r.size_constant_sum <= mpz_class(static_cast<long>(*r.exact_uec)));
    check("gamma_best_within_search",
          r.size_gamma_best <= mpz_class(static_cast<long>(*r.exact_uec)));
  }
  if (r.exact_ued)
    check("best_ca_within_search", r.size_best_ca <= mpz_class(static_cast<long>(*r.exact_ued)));
  check("gamma_best_at_most_linear_upper", r.size_gamma_best <= r.linear_upper);
  check("linear_lower_at_most_gamma_best",
        r.linear_lower <= mpq_class(r.size_gamma_best));
  mpz_class data_words;
  mpz_ui_pow_ui(data_words.get_mpz_t(), params.b(), params.n);
  check("tail_keeps_three_quarters", 4 * r.size_tail >= 3 * data_words);
  return r;
}

}  // namespace lmec::oracle
