#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "lmec/aec.hpp"
#include "lmec/io.hpp"
#include "lmec/uec.hpp"

using namespace lmec;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs the installed binary with the given arguments, capturing stdout.
// stderr is dropped unless merge is set.
RunResult run_cli(const std::string& args, bool merge = false) {
  std::string cmd = std::string(LMEC_CLI_PATH) + " " + args +
                    (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (!pipe) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  if (WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("codebook text round trips") {
  Codebook c = aec::build(CodeParams(5, 1, 2));
  std::ostringstream out;
  io::write_codebook(out, c);
  std::istringstream in(out.str());
  Codebook back = io::read_codebook(in);
  CHECK(back.params.q == 5);
  CHECK(back.params.ell == 1);
  CHECK(back.params.n == 2);
  CHECK(back.mode == Mode::Aec);
  CHECK(back.words == c.words);
}

TEST_CASE("reader skips comments and blank lines") {
  std::istringstream in(
      "# produced by hand\n"
      "\n"
      "q=3 l=1 n=2 mode=uec\n"
      "# a comment between rows\n"
      "0 1\n"
      "\n"
      "2 0\n");
  Codebook c = io::read_codebook(in);
  CHECK(c.mode == Mode::Uec);
  CHECK(c.words == std::vector<Word>{{0, 1}, {2, 0}});
}

TEST_CASE("reader rejects malformed input") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(io::read_codebook(in), std::invalid_argument);
  };
  reject("q=3 l=1 n=2\n");                          // missing mode
  reject("q=3 l=1 n=2 mode=xyz\n0 0\n");            // unknown mode
  reject("ell=3 l=1 n=2 mode=aec\n");               // wrong key
  reject("q=three l=1 n=2 mode=aec\n");             // non-numeric
  reject("q=3 l=1 n=2 mode=aec\n0 0 0\n");          // row too long
  reject("q=3 l=1 n=2 mode=aec\n0\n");              // row too short
  reject("q=3 l=1 n=2 mode=aec\n0 5\n");            // symbol out of range
  reject("q=3 l=1 n=2 mode=aec\n0 -1\n");           // negative symbol
  reject("q=1 l=1 n=2 mode=aec\n");                 // bad parameters
}

TEST_CASE("file reader reports unopenable paths") {
  CHECK_THROWS_AS(io::read_codebook_file("/nonexistent/path/code.txt"),
                  std::runtime_error);
  Codebook c = aec::build(CodeParams(3, 1, 2));
  CHECK_THROWS_AS(io::write_codebook_file("/nonexistent/path/code.txt", c),
                  std::runtime_error);
}

TEST_CASE("cli constructs and reports the summary") {
  RunResult merged =
      run_cli("construct --q 4 --ell 1 --n 2 --mode aec", true);
  CHECK(merged.status == 0);
  CHECK(merged.out ==
        "q=4 l=1 n=2 mode=aec\n"
        "0 0\n0 2\n2 0\n2 2\n"
        "q=4 l=1 n=2 mode=aec size=4 criterion=pass\n");

  RunResult summary = run_cli(
      "construct --q 7 --ell 2 --n 3 --mode aec --out /tmp/lmec_cli_aec.txt");
  CHECK(summary.status == 0);
  CHECK(summary.out == "q=7 l=2 n=3 mode=aec size=27 criterion=pass\n");
  Codebook back = io::read_codebook_file("/tmp/lmec_cli_aec.txt");
  CHECK(back.words == aec::build(CodeParams(7, 2, 3)).words);

  RunResult ued = run_cli(
      "construct --q 5 --ell 1 --n 3 --mode ued --a 0 --out /tmp/lmec_cli_ca.txt");
  CHECK(ued.status == 0);
  CHECK(ued.out == "q=5 l=1 n=3 mode=ued size=32 criterion=pass\n");

  RunResult tail = run_cli(
      "construct --q 5 --ell 1 --n 3 --mode uec --construction tail "
      "--out /tmp/lmec_cli_tail.txt");
  CHECK(tail.status == 0);
  CHECK(tail.out == "q=5 l=1 n=5 mode=uec size=25 criterion=pass\n");
}

TEST_CASE("cli decodes structured codes") {
  RunResult r = run_cli("decode --mode uec --q 5 --ell 1 --n 3 --received '2 2 1'");
  CHECK(r.status == 0);
  CHECK(r.out == "decoded: 2 2 2\nerror: 0 0 1 down\n");

  RunResult a = run_cli("decode --mode aec --q 7 --ell 2 --n 3 --received '4 6 2'");
  CHECK(a.status == 0);
  CHECK(a.out == "decoded: 3 6 0\nerror: 1 0 2 up\n");

  RunResult v = run_cli("decode --mode vt --q 4 --ell 1 --n 3 --a 7 --received '1 3 1'");
  CHECK(v.status == 0);
  CHECK(v.out == "decoded: 1 3 0\nerror: 0 0 1 up\n");
}

TEST_CASE("cli decodes against a codebook file") {
  REQUIRE(run_cli("construct --q 7 --ell 2 --n 3 --mode aec "
                  "--out /tmp/lmec_cli_aec.txt").status == 0);
  RunResult r = run_cli(
      "decode --code /tmp/lmec_cli_aec.txt --received '1 0 5'");
  CHECK(r.status == 0);
  CHECK(r.out == "decoded: 0 0 3\nerror: 1 0 2 up\n");
}

TEST_CASE("cli counting outputs") {
  RunResult m = run_cli("count --q 5 --ell 1 --n 4 --max");
  CHECK(m.status == 0);
  CHECK(m.out == "20 at offsets -6 -2 2 6\n");

  RunResult r = run_cli("count --q 5 --ell 1 --n 4 --r 0");
  CHECK(r.status == 0);
  CHECK(r.out == "17\n");

  RunResult t = run_cli("count --q 4 --ell 1 --n 2 --table");
  CHECK(t.status == 0);
  // Seven achievable sums 0..9 around the centered constant 3.
  CHECK(t.out ==
        "r=-3 count=1\nr=-2 count=1\nr=-1 count=2\nr=0 count=2\n"
        "r=1 count=2\nr=2 count=2\nr=3 count=2\nr=4 count=2\n"
        "r=5 count=1\nr=6 count=1\n");
}

TEST_CASE("cli table, window, and scan") {
  RunResult t = run_cli("table --q 3 --ell 1 --n 3");
  CHECK(t.status == 0);
  CHECK(t.out == "P: 1 3 6 7 6 3 1\nC: 7 6 7 7\nbest: a=0 size=7\n");

  RunResult w = run_cli("window --q 4 --ell 1 --n 3");
  CHECK(w.status == 0);
  CHECK(w.out == "[-1, 1]\n");

  RunResult na = run_cli("window --q 7 --ell 2 --n 3");
  CHECK(na.status == 0);
  CHECK(na.out == "not applicable\n");

  RunResult s = run_cli("scan --q 7 --ell 2 --n 2 --coeffs '1 3'");
  CHECK(s.status == 0);
  CHECK(s.out == "size=3 at a=12\n");
}

TEST_CASE("cli oracle prints the size and optional witness") {
  RunResult r = run_cli("oracle --q 3 --ell 1 --n 3 --mode ued");
  CHECK(r.status == 0);
  CHECK(r.out == "8\n");

  RunResult w = run_cli("oracle --q 3 --ell 1 --n 2 --mode uec --witness");
  CHECK(w.status == 0);
  CHECK(w.out == "2\n0 1\n2 0\n");

  RunResult o = run_cli(
      "oracle --q 3 --ell 1 --n 2 --mode aec --out /tmp/lmec_cli_witness.txt");
  CHECK(o.status == 0);
  CHECK(o.out == "4\n");
  Codebook back = io::read_codebook_file("/tmp/lmec_cli_witness.txt");
  CHECK(back.words == std::vector<Word>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
}

TEST_CASE("cli verify gates on both checks") {
  REQUIRE(run_cli("construct --q 7 --ell 2 --n 3 --mode aec "
                  "--out /tmp/lmec_cli_aec.txt").status == 0);
  RunResult good = run_cli("verify --code /tmp/lmec_cli_aec.txt");
  CHECK(good.status == 0);
  CHECK(good.out == "criterion: pass\noperational: pass\n");

  std::ofstream bad("/tmp/lmec_cli_bad.txt");
  bad << "q=3 l=1 n=2 mode=aec\n0 0\n1 1\n";
  bad.close();
  RunResult fail = run_cli("verify --code /tmp/lmec_cli_bad.txt");
  CHECK(fail.status == 5);
  CHECK(fail.out == "criterion: fail\noperational: fail\n");
}

TEST_CASE("cli report emits parseable json") {
  RunResult r = run_cli("report --q 4 --ell 1 --n 2 --format json");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"aec_capacity\": \"4\"") != std::string::npos);
  CHECK(r.out.find("\"linear_lower\": \"4/3\"") != std::string::npos);
  CHECK(r.out.find("\"two_level\": \"4\"") != std::string::npos);
  CHECK(r.out.find("\"exact_ued\": \"6\"") != std::string::npos);
  CHECK(r.out.find("\"pass\": false") == std::string::npos);

  // Past the cap the exact entries are omitted rather than faked.
  RunResult capped = run_cli("report --q 4 --ell 1 --n 2 --cap 10 --format json");
  CHECK(capped.status == 0);
  CHECK(capped.out.find("exact_aec") == std::string::npos);

  RunResult text = run_cli("report --q 4 --ell 1 --n 2");
  CHECK(text.status == 0);
  CHECK(text.out.find("aec_capacity   4\n") != std::string::npos);
  CHECK(text.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli simulate is deterministic and clean") {
  std::string args =
      "simulate --q 5 --ell 1 --n 3 --mode uec --construction tail "
      "--seed 7 --rounds 400";
  RunResult r1 = run_cli(args);
  RunResult r2 = run_cli(args);
  CHECK(r1.status == 0);
  CHECK(r1.out == "seed=7 rounds=400 failures=0\n");
  CHECK(r1.out == r2.out);

  RunResult aec = run_cli(
      "simulate --q 7 --ell 2 --n 3 --mode aec --seed 11 --rounds 400");
  CHECK(aec.status == 0);
  CHECK(aec.out == "seed=11 rounds=400 failures=0\n");

  RunResult vt = run_cli(
      "simulate --q 4 --ell 1 --n 3 --mode vt --r 0 --seed 3 --rounds 400");
  CHECK(vt.status == 0);
  CHECK(vt.out == "seed=3 rounds=400 failures=0\n");
}

TEST_CASE("cli exit codes distinguish the failure kinds") {
  std::ofstream bad("/tmp/lmec_cli_bad.txt");
  bad << "q=3 l=1 n=2 mode=aec\n0 0\n1 1\n";
  bad.close();
  CHECK(run_cli("construct --q 4 --ell 1 --n 2", true).status == 2);
  CHECK(run_cli("decode --mode uec --q 5 --ell 1 --n 3 --j 3 --received '1 1 0'",
                true).status == 3);
  CHECK(run_cli("oracle --q 7 --ell 1 --n 6 --mode aec", true).status == 4);
  CHECK(run_cli("verify --code /tmp/lmec_cli_bad.txt", true).status == 5);
  CHECK(run_cli("nonsense", true).status == 2);
  CHECK(run_cli("decode --mode aec --q 7 --ell 2 --n 3 --received '4 7 2'",
                true).status == 2);
}

TEST_CASE("written files carry the header that reads back") {
  REQUIRE(run_cli("construct --q 7 --ell 2 --n 3 --mode aec "
                  "--out /tmp/lmec_cli_aec.txt").status == 0);
  std::string text = slurp("/tmp/lmec_cli_aec.txt");
  CHECK(text.rfind("q=7 l=2 n=3 mode=aec\n", 0) == 0);
}
