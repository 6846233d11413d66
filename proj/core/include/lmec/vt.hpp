#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "lmec/channel.hpp"
#include "lmec/counting.hpp"
#include "lmec/types.hpp"

namespace lmec::vt {

// The solution set in Q^n of one exact integer equation sum a_i x_i = a.
struct LinearCode {
  CodeParams params;
  std::vector<long long> coeffs;  // nonzero
  long long constant;

  LinearCode(CodeParams p, std::vector<long long> c, long long a);
};

// Power-coefficient instance: coefficients (ell+1)^i, constant alpha*S_n + r
// with alpha = floor((q-1)/2) and S_n = ((ell+1)^n - 1)/ell. These codes
// correct one unidirectional level-ell error for every offset r.
struct PowerCodeSpec {
  CodeParams params;
  long long r;

  PowerCodeSpec(CodeParams p, long long offset);
  static PowerCodeSpec from_constant(const CodeParams& p, long long a);

  long long alpha() const { return (params.q - 1) / 2; }
  long long S() const;                  // 1 + (ell+1) + ... + (ell+1)^{n-1}
  long long constant() const { return alpha() * S() + r; }
  std::vector<long long> coeffs() const;
  LinearCode to_linear() const;
};

// All solutions, depth-first with suffix-interval pruning; lexicographic.
Codebook enumerate(const LinearCode& code);

// True iff the only vector of [-ell,ell]^n union [0,2*ell]^n orthogonal to
// the coefficients is zero. Sufficient for the code to correct all
// unidirectional level-ell errors whatever the constant.
bool is_uec_hyperplane(const std::vector<long long>& coeffs, int ell);

// Syndrome decoder: a' = sum (ell+1)^i y_i; the base-(ell+1) digits of
// |a' - a| are the error magnitudes, subtracted when a' > a and added when
// a' < a. Fails if |a' - a| >= (ell+1)^n or a symbol leaves the alphabet.
std::pair<Word, ErrorVector> decode_power(const Word& y, const PowerCodeSpec& spec);

// Complements every coordinate carrying a negative coefficient: coefficients
// become |a_i|, the constant becomes a - s(q-1) with s the sum of the
// negative coefficients. Preserves cardinality; maps codes whose pairwise
// dmax exceeds ell into codes meeting the unidirectional criterion.
LinearCode aec_to_uec(const LinearCode& code);

// Congruence relaxation sum a_i z_i == a (mod 2*ell*S + 1), S = sum a_i.
// Requires all-positive coefficients; contains the exact code.
struct CongruenceCode {
  CodeParams params;
  std::vector<long long> coeffs;
  long long constant;
  long long modulus;
};

CongruenceCode congruence_variant(const LinearCode& code);
Codebook enumerate(const CongruenceCode& code);

// Length m+n code whose solution set is the cartesian product of the two
// inputs, via coefficient scaling by M = sum |a_i| (q-1) + 1.
LinearCode direct_product(const LinearCode& a, const LinearCode& b);

// Size of the power-coefficient code at offset r, exact. Computed by the
// level recursion with memoization, so large n is cheap for single offsets.
mpz_class gamma(const CodeParams& params, long long r);

// c_0..c_{n} for fixed r (c_0 = 1 when r = 0: empty-product convention).
std::vector<mpz_class> gamma_sequence(const CodeParams& params, long long r);

// Full coefficient table of prod_i f(x^{(ell+1)^i}), f = 1 + x + ... +
// x^{q-1}; exponent e corresponds to offset r = e - alpha*S_n.
CountTable gamma_table(const CodeParams& params,
                       long long degree_cap = kDefaultDegreeCap);

// Maximum of gamma over all offsets, with every maximizing offset ascending.
std::pair<mpz_class, std::vector<long long>> gamma_max(
    const CodeParams& params, long long degree_cap = kDefaultDegreeCap);

// Offset window [u_n, v_n] on which gamma provably equals b^{n-1}:
// the divisible case (ell+1 | q) uses the reflection recursion
// u_k = (ell+1)u_{k-1} + alpha, v_k = (ell+1)v_{k-1} - alpha from (-alpha,
// alpha); otherwise q is scanned for a decomposition 2m(ell+1) + 2c + 1 +
// delta (delta ascending, c descending, first fit) whose side conditions
// admit the shifted window u_n = -c + lambda_n (ell+1), width q mod (ell+1).
// nullopt when neither case applies.
struct Window {
  long long u, v;
};
std::optional<Window> optimal_window(const CodeParams& params);

// ell/(q-1) * (q/(ell+1))^n <= (largest single-equation code) <= b^{n-1}.
std::pair<mpq_class, mpz_class> la_u_bounds(const CodeParams& params);

// Scans every achievable constant for the given coefficients and returns the
// best (constant, solution count). Ties break toward the constant nearest the
// midpoint of the achievable interval, then toward the smaller constant.
std::pair<long long, mpz_class> best_constant_scan(
    const CodeParams& params, const std::vector<long long>& coeffs,
    long long degree_cap = kDefaultDegreeCap);

// True iff seq[k] = rec[0]*seq[k-1] + ... + rec[order-1]*seq[k-order] holds
// exactly for every k >= order.
bool verify_recurrence(const std::vector<mpz_class>& seq,
                       const std::vector<long long>& rec);

}  // namespace lmec::vt
