#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>

#include "lmec/aec.hpp"
#include "lmec/channel.hpp"
#include "lmec/distance.hpp"

using namespace lmec;

namespace {

// Visits every magnitude vector in [0, ell]^n.
void for_all_errors(int ell, int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> e(n, 0);
  while (true) {
    f(e);
    int i = n - 1;
    while (i >= 0 && e[i] == ell) e[i--] = 0;
    if (i < 0) return;
    ++e[i];
  }
}

}  // namespace

TEST_CASE("capacity is the residue level count to the n-th power") {
  CHECK(aec::capacity(CodeParams(7, 2, 3)) == 27);
  CHECK(aec::capacity(CodeParams(5, 1, 2)) == 9);
  CHECK(aec::capacity(CodeParams(4, 1, 1)) == 2);
  CHECK(aec::capacity(CodeParams(6, 2, 4)) == 16);
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 50);
  CHECK(aec::capacity(CodeParams(3, 1, 50)) == big);
}

TEST_CASE("encode spreads digits onto the residue grid") {
  CodeParams p(7, 2, 3);
  CHECK(aec::encode({0, 1, 2}, p) == Word{0, 3, 6});
  CHECK(aec::encode({2, 2, 2}, p) == Word{6, 6, 6});
  CHECK_THROWS_AS(aec::encode({0, 3, 0}, p), std::invalid_argument);
  CHECK_THROWS_AS(aec::encode({0, -1, 0}, p), std::invalid_argument);
  CHECK_THROWS_AS(aec::encode({0, 0}, p), std::invalid_argument);
}

TEST_CASE("decode rounds every coordinate down to the grid") {
  CodeParams p(7, 2, 3);
  CHECK(aec::decode({1, 4, 6}, p) == Word{0, 3, 6});
  CHECK(aec::decode({0, 0, 0}, p) == Word{0, 0, 0});
  CHECK(aec::decode({2, 5, 6}, p) == Word{0, 3, 6});
  CHECK_THROWS_AS(aec::decode({7, 0, 0}, p), std::invalid_argument);
  CHECK_THROWS_AS(aec::decode({0, 0}, p), std::invalid_argument);
}

TEST_CASE("the codeword walk is lexicographic and complete") {
  CodeParams p(5, 1, 3);
  std::vector<Word> seen;
  aec::for_each_codeword(p, [&seen](const Word& w) { seen.push_back(w); });
  CHECK(seen.size() == 27);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  CHECK(seen.front() == Word{0, 0, 0});
  CHECK(seen.back() == Word{4, 4, 4});
  for (const Word& w : seen)
    for (int s : w) CHECK(s % 2 == 0);
}

TEST_CASE("built codebooks match the walk and pass the criterion") {
  for (auto [q, ell, n] : {std::tuple{5, 1, 2}, {7, 2, 2}, {4, 2, 3}}) {
    CodeParams p(q, ell, n);
    Codebook c = aec::build(p);
    CHECK(mpz_class(static_cast<long>(c.words.size())) == aec::capacity(p));
    CHECK(c.mode == Mode::Aec);
    CHECK(is_aec(c));
  }
}

TEST_CASE("materialization refuses oversized codes") {
  CHECK_THROWS_AS(aec::build(CodeParams(65536, 1, 3)), ResourceCapError);
  CHECK_THROWS_AS(aec::build(CodeParams(5, 1, 3), 10), ResourceCapError);
  CHECK_NOTHROW(aec::build(CodeParams(5, 1, 3), 27));
}

TEST_CASE("every valid error pattern decodes back exhaustively") {
  for (int n = 1; n <= 3; ++n) {
    CodeParams p(7, 2, n);
    aec::for_each_codeword(p, [&p](const Word& x) {
      for_all_errors(p.ell, p.n, [&](const std::vector<int>& mags) {
        ErrorVector e{mags, Direction::Up};
        bool valid = true;
        for (int i = 0; i < p.n; ++i)
          if (x[i] + mags[i] >= p.q) valid = false;
        if (!valid) return;
        Word y = apply(x, e, p);
        CHECK(aec::decode(y, p) == x);
      });
    });
  }
}

TEST_CASE("codewords are pairwise separated beyond the error level") {
  CodeParams p(6, 2, 2);
  Codebook c = aec::build(p);
  for (size_t i = 0; i < c.words.size(); ++i)
    for (size_t j = i + 1; j < c.words.size(); ++j)
      CHECK(dmax(c.words[i], c.words[j]) >= p.ell + 1);
}
