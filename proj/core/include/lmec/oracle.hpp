#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lmec/types.hpp"

namespace lmec::oracle {

// Conflict graph over all q^n words: an edge joins two words that no valid
// code of the mode may contain together (Aec: dmax <= ell; Uec: du <= 2*ell;
// Ued: comparable with dmax <= ell). Codes are exactly the independent sets.
struct ConflictGraph {
  CodeParams params;
  Mode mode;
  int V = 0;                  // q^n
  int W = 0;                  // 64-bit words per adjacency row
  std::vector<uint64_t> bits; // V rows

  ConflictGraph(CodeParams p, Mode m) : params(p), mode(m) {}

  bool adjacent(int i, int j) const {
    return bits[static_cast<size_t>(i) * W + (j >> 6)] >> (j & 63) & 1;
  }
  Word word_of(int index) const;
  int index_of(const Word& w) const;
};

// Vertex guard: LMEC_ORACLE_CAP when set, otherwise 20000.
int default_cap();

ConflictGraph build_conflict_graph(const CodeParams& params, Mode mode,
                                   int cap = -1);

// Exact maximum code size for the mode, with the lexicographically least
// maximum witness. Branch and bound with greedy-coloring pruning; after the
// optimum is known a prefix-forcing pass canonicalizes the witness, so the
// result does not depend on search internals. Throws ResourceCapError when
// q^n exceeds the cap.
std::pair<long long, Codebook> max_code_exact(const CodeParams& params, Mode mode,
                                              int cap = -1);

// Operational validity: the channel outputs reachable from distinct codewords
// never overlap (Aec under the asymmetric channel, Uec under the
// unidirectional one).
bool verify_correction(const Codebook& c, Mode mode);

struct BoundReport {
  explicit BoundReport(CodeParams p) : params(p) {}

  CodeParams params;
  mpz_class aec_capacity;               // ceil(q/(ell+1))^n
  mpq_class linear_lower;               // single-equation code bounds
  mpz_class linear_upper;
  std::optional<mpz_class> size_two_level;
  mpz_class size_constant_sum;          // at jstar
  mpz_class size_tail;
  int tail_length = 0;                  // n + tail symbols
  mpz_class size_gamma_best;
  long long gamma_best_offset = 0;
  long long best_ca_class = 0;
  mpz_class size_best_ca;
  std::optional<long long> exact_aec, exact_uec, exact_ued;
  std::vector<std::pair<std::string, bool>> checks;

  bool all_pass() const;
};

// One table row: closed-form capacity, single-equation bounds, every
// construction size, exact search values where the graph fits the cap, and
// the asserted inequality chain between them.
BoundReport bound_report(const CodeParams& params, int cap = -1);

}  // namespace lmec::oracle
