#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lmec/counting.hpp"
#include "lmec/distance.hpp"
#include "lmec/types.hpp"

using namespace lmec;

TEST_CASE("params validate their ranges") {
  CHECK_NOTHROW(CodeParams(3, 1, 1));
  CHECK_NOTHROW(CodeParams(65536, 1, 4));
  CHECK_THROWS_AS(CodeParams(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(CodeParams(65537, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(CodeParams(4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(CodeParams(4, 3, 1), std::invalid_argument);  // ell > q-2
  CHECK_THROWS_AS(CodeParams(4, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(CodeParams(2, 1, 1), std::invalid_argument);  // q=2 has no ell
}

TEST_CASE("residue level count") {
  CHECK(CodeParams(7, 2, 1).b() == 3);
  CHECK(CodeParams(4, 1, 1).b() == 2);
  CHECK(CodeParams(5, 1, 1).b() == 3);
  CHECK(CodeParams(9, 2, 1).b() == 3);
  CHECK(CodeParams(6, 2, 1).b() == 2);
  CHECK(CodeParams(65536, 1, 1).b() == 32768);
}

TEST_CASE("mode names round-trip") {
  for (Mode m : {Mode::Aec, Mode::Uec, Mode::Ued})
    CHECK(parse_mode(mode_name(m)) == m);
  CHECK_THROWS_AS(parse_mode("bogus"), std::invalid_argument);
}

TEST_CASE("codebooks are sorted, deduplicated, and validated") {
  CodeParams p(4, 1, 2);
  Codebook c = make_codebook(p, Mode::Uec, {{3, 0}, {0, 3}, {3, 0}});
  CHECK(c.words == std::vector<Word>{{0, 3}, {3, 0}});
  CHECK_THROWS_AS(make_codebook(p, Mode::Uec, {{0, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(make_codebook(p, Mode::Uec, {{0, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_codebook(p, Mode::Uec, {{0}}), std::invalid_argument);
}

TEST_CASE("coordinate distance and dominance") {
  CHECK(dmax({0, 2}, {1, 0}) == 2);
  CHECK(dmax({1, 1, 1}, {1, 1, 1}) == 0);
  CHECK(dmax({5}, {0}) == 5);
  CHECK(comparable({0, 0}, {1, 2}));
  CHECK(comparable({3, 2}, {1, 2}));
  CHECK(comparable({1, 1}, {1, 1}));
  CHECK_FALSE(comparable({0, 2}, {1, 0}));
  CHECK_THROWS_AS(dmax({0, 1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(du({0, 1}, {0}), std::invalid_argument);
}

TEST_CASE("one-sided distance doubles for incomparable pairs") {
  CHECK(du({0, 2}, {1, 2}) == 1);   // comparable
  CHECK(du({1, 2}, {1, 0}) == 2);   // comparable
  CHECK(du({0, 2}, {1, 0}) == 4);   // incomparable, 2 * dmax
  // Triangle inequality fails: 4 > 1 + 2, so du is not a metric.
  CHECK(du({0, 2}, {1, 0}) > du({0, 2}, {1, 2}) + du({1, 2}, {1, 0}));
}

TEST_CASE("pairwise code criteria") {
  CodeParams p(3, 1, 2);
  // {0,2}^2: every pair at dmax 2 >= ell+1, comparable pairs at du 2 < 3.
  Codebook cube = make_codebook(p, Mode::Aec, {{0, 0}, {0, 2}, {2, 0}, {2, 2}});
  CHECK(is_aec(cube));
  cube.mode = Mode::Uec;
  CHECK_FALSE(is_uec(cube));
  cube.mode = Mode::Ued;
  CHECK(is_ued(cube));

  Codebook pair = make_codebook(p, Mode::Uec, {{0, 1}, {2, 0}});
  CHECK(is_uec(pair));  // incomparable at dmax 2: du = 4 >= 3

  Codebook close = make_codebook(p, Mode::Aec, {{0, 0}, {1, 0}});
  CHECK_FALSE(is_aec(close));
  close.mode = Mode::Ued;
  CHECK_FALSE(is_ued(close));

  Codebook single = make_codebook(p, Mode::Uec, {{1, 1}});
  CHECK(is_aec(single));
  CHECK(is_uec(single));
  CHECK(is_ued(single));
}

TEST_CASE("sum tables count bounded tuples") {
  CountTable t = uniform_sum_table(2, 3);
  CHECK(t.min_exponent() == 0);
  CHECK(t.max_exponent() == 3);
  CHECK(t.at(0) == 1);
  CHECK(t.at(1) == 3);
  CHECK(t.at(2) == 3);
  CHECK(t.at(3) == 1);
  CHECK(t.at(4) == 0);
  CHECK(t.at(-1) == 0);
  CHECK(t.total() == 8);

  CountTable t3 = uniform_sum_table(3, 3);
  std::vector<long> expect = {1, 3, 6, 7, 6, 3, 1};
  for (long long e = 0; e <= 6; ++e) CHECK(t3.at(e) == expect[static_cast<size_t>(e)]);
  CHECK(t3.total() == 27);
}

TEST_CASE("value distributions handle negative coefficients") {
  CountTable t = value_distribution(3, {1, -1});
  CHECK(t.min_exponent() == -2);
  CHECK(t.max_exponent() == 2);
  CHECK(t.at(-2) == 1);
  CHECK(t.at(-1) == 2);
  CHECK(t.at(0) == 3);
  CHECK(t.at(1) == 2);
  CHECK(t.at(2) == 1);
  CHECK(t.total() == 9);
}

TEST_CASE("value distribution total is q^n") {
  for (int q : {2, 3, 5}) {
    std::vector<long long> coeffs = {2, -3, 1, 7};
    CountTable t = value_distribution(q, coeffs);
    mpz_class expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), q, coeffs.size());
    CHECK(t.total() == expect);
  }
}

TEST_CASE("degree cap refuses oversized tables") {
  CHECK_THROWS_AS(uniform_sum_table(65536, 200), ResourceCapError);
  CHECK_THROWS_AS(value_distribution(65536, {1'000'000'000, 1}),
                  ResourceCapError);
  // A tightened cap refuses what the default admits.
  CHECK_NOTHROW(uniform_sum_table(10, 10));
  CHECK_THROWS_AS(uniform_sum_table(10, 10, 50), ResourceCapError);
}

TEST_CASE("residue class sizes") {
  CHECK(residue_count(10, 3, 0) == 4);  // 0,3,6,9
  CHECK(residue_count(10, 3, 1) == 3);
  CHECK(residue_count(10, 3, 2) == 3);
  CHECK(residue_count(9, 3, 0) == 3);
  CHECK(residue_count(7, 2, 0) == 4);
  CHECK(residue_count(7, 2, 1) == 3);
}
