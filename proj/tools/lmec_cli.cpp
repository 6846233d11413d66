// lmec: construct, decode, count, inspect, and verify codes for channels
// whose errors shift symbols by at most a fixed magnitude in one direction.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lmec/aec.hpp"
#include "lmec/channel.hpp"
#include "lmec/counting.hpp"
#include "lmec/distance.hpp"
#include "lmec/io.hpp"
#include "lmec/oracle.hpp"
#include "lmec/ued.hpp"
#include "lmec/uec.hpp"
#include "lmec/vt.hpp"

namespace {

using namespace lmec;

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  Word w;
  long long s;
  while (in >> s) w.push_back(static_cast<Symbol>(s));
  if (!in.eof())
    throw std::invalid_argument("cannot parse word '" + text + "'");
  if (w.empty()) throw std::invalid_argument("empty received word");
  return w;
}

std::vector<long long> parse_coeffs(const std::string& text) {
  std::istringstream in(text);
  std::vector<long long> a;
  long long v;
  while (in >> v) a.push_back(v);
  if (!in.eof() || a.empty())
    throw std::invalid_argument("cannot parse coefficients '" + text + "'");
  return a;
}

std::string word_str(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

bool criterion_holds(const Codebook& c) {
  switch (c.mode) {
    case Mode::Aec:
      return is_aec(c);
    case Mode::Uec:
      return is_uec(c);
    case Mode::Ued:
      return is_ued(c);
  }
  return false;
}

// y = x + e or x - e with a single sign; recovers e.
ErrorVector infer_error(const Word& x, const Word& y) {
  ErrorVector e;
  e.direction = Direction::Up;
  bool down = false;
  for (size_t i = 0; i < x.size(); ++i) {
    if (y[i] < x[i]) down = true;
    e.magnitudes.push_back(std::abs(y[i] - x[i]));
  }
  if (down) e.direction = Direction::Down;
  return e;
}

const char* direction_str(Direction d) {
  return d == Direction::Up ? "up" : "down";
}

struct CommonOpts {
  int q = 0, ell = 0, n = 0;

  CodeParams params() const { return CodeParams(q, ell, n); }
  void add_to(CLI::App* cmd) {
    cmd->add_option("--q", q, "alphabet size")->required();
    cmd->add_option("--ell", ell, "error magnitude bound")->required();
    cmd->add_option("--n", n, "code length")->required();
  }
};

// ---------------------------------------------------------------- construct

struct ConstructOpts {
  CommonOpts common;
  std::string mode;
  std::string construction = "constant-sum";
  long long j = -1;  // constant-sum level; default jstar
  long long a = 0;
  bool has_a = false;
  long long r = 0;
  bool has_r = false;
  std::string coeffs;
  std::string out;
};

Codebook construct_codebook(const ConstructOpts& o) {
  CodeParams p = o.common.params();
  if (o.mode == "aec") return aec::build(p);
  if (o.mode == "uec") {
    if (o.construction == "constant-sum")
      return uec::build_constant_sum(p, o.j >= 0 ? o.j : uec::jstar(p));
    if (o.construction == "two-level") return uec::build_two_level(p);
    if (o.construction == "tail") return uec::build_tail_code(p);
    throw std::invalid_argument("unknown construction '" + o.construction +
                                "' (constant-sum, two-level, tail)");
  }
  if (o.mode == "ued") return ued::build_ca(p, o.a);
  if (o.mode == "vt") {
    if (!o.coeffs.empty()) {
      if (!o.has_a)
        throw std::invalid_argument("--coeffs requires --a <constant>");
      return vt::enumerate(vt::LinearCode(p, parse_coeffs(o.coeffs), o.a));
    }
    vt::PowerCodeSpec spec =
        o.has_a ? vt::PowerCodeSpec::from_constant(p, o.a)
                : vt::PowerCodeSpec(p, o.has_r ? o.r : 0);
    return vt::enumerate(spec.to_linear());
  }
  throw std::invalid_argument("unknown mode '" + o.mode +
                              "' (aec, uec, ued, vt)");
}

int cmd_construct(const ConstructOpts& o) {
  Codebook c = construct_codebook(o);
  bool ok = criterion_holds(c);
  std::ostringstream summary;
  summary << "q=" << c.params.q << " l=" << c.params.ell << " n=" << c.params.n
          << " mode=" << mode_name(c.mode) << " size=" << c.words.size()
          << " criterion=" << (ok ? "pass" : "FAIL") << "\n";
  if (!o.out.empty()) {
    io::write_codebook_file(o.out, c);
    std::cout << summary.str();
  } else {
    io::write_codebook(std::cout, c);
    std::cerr << summary.str();
  }
  return ok ? 0 : 5;
}

// ------------------------------------------------------------------- decode

struct DecodeOpts {
  CommonOpts common;
  bool has_params = false;
  std::string code_file;
  std::string mode;
  std::string construction = "constant-sum";
  long long j = -1;
  long long a = 0;
  bool has_a = false;
  long long r = 0;
  std::string received;
};

int cmd_decode(const DecodeOpts& o) {
  Word y = parse_word(o.received);
  Word x;
  ErrorVector e;
  if (!o.code_file.empty()) {
    Codebook c = io::read_codebook_file(o.code_file);
    x = uec::decode_codebook(c, y);
    e = infer_error(x, y);
  } else if (o.mode == "aec") {
    x = aec::decode(y, o.common.params());
    e = infer_error(x, y);
  } else if (o.mode == "vt") {
    CodeParams p = o.common.params();
    vt::PowerCodeSpec spec = o.has_a ? vt::PowerCodeSpec::from_constant(p, o.a)
                                     : vt::PowerCodeSpec(p, o.r);
    auto [dx, de] = vt::decode_power(y, spec);
    x = dx;
    e = de;
  } else if (o.mode == "uec") {
    CodeParams p = o.common.params();
    if (o.construction == "constant-sum")
      x = uec::decode_constant_sum(p, o.j >= 0 ? o.j : uec::jstar(p), y);
    else if (o.construction == "two-level")
      x = uec::decode_two_level(p, y);
    else if (o.construction == "tail")
      x = uec::decode_tail(p, y);
    else
      throw std::invalid_argument("unknown construction '" + o.construction + "'");
    e = infer_error(x, y);
  } else {
    throw std::invalid_argument(
        "decode needs --code <file> or --mode {aec,vt,uec}");
  }
  std::cout << "decoded: " << word_str(x) << "\n";
  std::cout << "error: ";
  for (size_t i = 0; i < e.magnitudes.size(); ++i)
    std::cout << e.magnitudes[i] << ' ';
  std::cout << direction_str(e.direction) << "\n";
  return 0;
}

// -------------------------------------------------------------------- count

struct CountOpts {
  CommonOpts common;
  long long r = 0;
  bool has_r = false;
  bool max = false;
  bool table = false;
};

int cmd_count(const CountOpts& o) {
  CodeParams p = o.common.params();
  if (o.has_r) {
    std::cout << vt::gamma(p, o.r).get_str() << "\n";
    return 0;
  }
  if (o.table) {
    CountTable t = vt::gamma_table(p);
    long long shift = vt::PowerCodeSpec(p, 0).constant();
    for (long long e = t.min_exponent(); e <= t.max_exponent(); ++e)
      std::cout << "r=" << e - shift << " count=" << t.at(e).get_str() << "\n";
    return 0;
  }
  auto [best, offsets] = vt::gamma_max(p);
  std::cout << best.get_str() << " at offsets";
  for (long long r : offsets) std::cout << ' ' << r;
  std::cout << "\n";
  return 0;
}

// -------------------------------------------------------------------- table

int cmd_table(const CommonOpts& common) {
  CodeParams p = common.params();
  std::cout << "P:";
  for (const mpz_class& v : ued::pi_sequence(p)) std::cout << ' ' << v.get_str();
  std::cout << "\nC:";
  for (long long a = 0; a <= static_cast<long long>(p.ell) * p.n; ++a)
    std::cout << ' ' << ued::ca_size(p, a).get_str();
  auto [best_a, best_size] = ued::best_ca(p);
  std::cout << "\nbest: a=" << best_a << " size=" << best_size.get_str() << "\n";
  return 0;
}

// ------------------------------------------------------------------- window

int cmd_window(const CommonOpts& common) {
  auto w = vt::optimal_window(common.params());
  if (w)
    std::cout << "[" << w->u << ", " << w->v << "]\n";
  else
    std::cout << "not applicable\n";
  return 0;
}

// --------------------------------------------------------------------- scan

int cmd_scan(const CommonOpts& common, const std::string& coeffs) {
  auto [a, size] =
      vt::best_constant_scan(common.params(), parse_coeffs(coeffs));
  std::cout << "size=" << size.get_str() << " at a=" << a << "\n";
  return 0;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& code_file) {
  Codebook c = io::read_codebook_file(code_file);
  bool crit = criterion_holds(c);
  bool oper = c.mode == Mode::Ued ? ued::detects_all(c)
                                  : oracle::verify_correction(c, c.mode);
  std::cout << "criterion: " << (crit ? "pass" : "fail") << "\n";
  std::cout << "operational: " << (oper ? "pass" : "fail") << "\n";
  return crit && oper ? 0 : 5;
}

// ------------------------------------------------------------------- oracle

struct OracleOpts {
  CommonOpts common;
  std::string mode;
  bool witness = false;
  int cap = -1;
  std::string out;
};

int cmd_oracle(const OracleOpts& o) {
  auto [size, best] =
      oracle::max_code_exact(o.common.params(), parse_mode(o.mode), o.cap);
  std::cout << size << "\n";
  if (o.witness)
    for (const Word& w : best.words) std::cout << word_str(w) << "\n";
  if (!o.out.empty()) io::write_codebook_file(o.out, best);
  return 0;
}

// ------------------------------------------------------------------- report

struct ReportOpts {
  CommonOpts common;
  std::string format = "text";
  int cap = -1;
};

int cmd_report(const ReportOpts& o) {
  oracle::BoundReport r = oracle::bound_report(o.common.params(), o.cap);
  if (o.format == "json") {
    nlohmann::ordered_json out;
    out["params"] = {{"q", r.params.q}, {"ell", r.params.ell}, {"n", r.params.n}};
    nlohmann::ordered_json bounds;
    bounds["aec_capacity"] = r.aec_capacity.get_str();
    bounds["linear_lower"] = r.linear_lower.get_str();
    bounds["linear_upper"] = r.linear_upper.get_str();
    out["bounds"] = bounds;
    nlohmann::ordered_json sizes;
    if (r.size_two_level) sizes["two_level"] = r.size_two_level->get_str();
    sizes["constant_sum"] = r.size_constant_sum.get_str();
    sizes["tail"] = r.size_tail.get_str();
    sizes["tail_length"] = r.tail_length;
    sizes["gamma_best"] = r.size_gamma_best.get_str();
    sizes["gamma_best_offset"] = r.gamma_best_offset;
    sizes["best_ca"] = r.size_best_ca.get_str();
    sizes["best_ca_class"] = r.best_ca_class;
    if (r.exact_aec) sizes["exact_aec"] = std::to_string(*r.exact_aec);
    if (r.exact_uec) sizes["exact_uec"] = std::to_string(*r.exact_uec);
    if (r.exact_ued) sizes["exact_ued"] = std::to_string(*r.exact_ued);
    out["sizes"] = sizes;
    out["checks"] = nlohmann::ordered_json::array();
    for (const auto& [name, pass] : r.checks)
      out["checks"].push_back({{"name", name}, {"pass", pass}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "q=" << r.params.q << " l=" << r.params.ell
              << " n=" << r.params.n << "\n";
    std::cout << "aec_capacity   " << r.aec_capacity.get_str() << "\n";
    std::cout << "linear_lower   " << r.linear_lower.get_str() << "\n";
    std::cout << "linear_upper   " << r.linear_upper.get_str() << "\n";
    if (r.size_two_level)
      std::cout << "two_level      " << r.size_two_level->get_str() << "\n";
    std::cout << "constant_sum   " << r.size_constant_sum.get_str() << "\n";
    std::cout << "tail           " << r.size_tail.get_str() << " (length "
              << r.tail_length << ")\n";
    std::cout << "gamma_best     " << r.size_gamma_best.get_str()
              << " (offset " << r.gamma_best_offset << ")\n";
    std::cout << "best_ca        " << r.size_best_ca.get_str() << " (class "
              << r.best_ca_class << ")\n";
    if (r.exact_aec) std::cout << "exact_aec      " << *r.exact_aec << "\n";
    if (r.exact_uec) std::cout << "exact_uec      " << *r.exact_uec << "\n";
    if (r.exact_ued) std::cout << "exact_ued      " << *r.exact_ued << "\n";
    std::cout << "checks:\n";
    for (const auto& [name, pass] : r.checks)
      std::cout << "  " << name << " " << (pass ? "pass" : "FAIL") << "\n";
  }
  return r.all_pass() ? 0 : 5;
}

// ----------------------------------------------------------------- simulate

struct SimulateOpts {
  CommonOpts common;
  std::string mode = "uec";
  std::string construction = "constant-sum";
  long long j = -1;
  long long r = 0;
  uint64_t seed = 0;
  long long rounds = 1000;
};

int cmd_simulate(const SimulateOpts& o) {
  CodeParams p = o.common.params();
  std::vector<Word> words;
  std::function<Word(const Word&)> decode;
  bool down_allowed = true;

  if (o.mode == "aec") {
    words = aec::build(p).words;
    decode = [p](const Word& y) { return aec::decode(y, p); };
    down_allowed = false;
  } else if (o.mode == "vt") {
    vt::PowerCodeSpec spec(p, o.r);
    words = vt::enumerate(spec.to_linear()).words;
    decode = [spec](const Word& y) { return vt::decode_power(y, spec).first; };
  } else if (o.mode == "uec") {
    if (o.construction == "constant-sum") {
      long long j = o.j >= 0 ? o.j : uec::jstar(p);
      words = uec::build_constant_sum(p, j).words;
      decode = [p, j](const Word& y) {
        return uec::decode_constant_sum(p, j, y);
      };
    } else if (o.construction == "two-level") {
      words = uec::build_two_level(p).words;
      decode = [p](const Word& y) { return uec::decode_two_level(p, y); };
    } else if (o.construction == "tail") {
      words = uec::build_tail_code(p).words;
      decode = [p](const Word& y) { return uec::decode_tail(p, y); };
    } else {
      throw std::invalid_argument("unknown construction '" + o.construction + "'");
    }
  } else {
    throw std::invalid_argument("simulate needs --mode {aec,uec,vt}");
  }
  if (words.empty()) throw std::invalid_argument("empty code, nothing to simulate");
  // The tail construction appends check symbols, so errors must cover the
  // full transmitted length, not just the data part.
  CodeParams channel_params(p.q, p.ell, static_cast<int>(words.front().size()));

  std::mt19937_64 rng(o.seed);
  long long failures = 0;
  for (long long round = 0; round < o.rounds; ++round) {
    const Word& x = words[uniform_below(rng, words.size())];
    // Rejection: redraw until the pattern keeps every symbol inside the
    // alphabet, so the channel distribution is uniform over valid patterns.
    Word y;
    for (int attempt = 0;; ++attempt) {
      Direction d = down_allowed && uniform_below(rng, 2) ? Direction::Down
                                                          : Direction::Up;
      ErrorVector e = sample_error(channel_params, d, p.ell, rng);
      if (attempt >= 10000) {
        y = x;
        break;
      }
      bool ok = true;
      for (size_t i = 0; i < x.size() && ok; ++i) {
        int v = d == Direction::Up ? x[i] + e.magnitudes[i]
                                   : x[i] - e.magnitudes[i];
        ok = 0 <= v && v < channel_params.q;
      }
      if (!ok) continue;
      y = apply(x, e, channel_params);
      break;
    }
    try {
      if (decode(y) != x) ++failures;
    } catch (const DecodeFailure&) {
      ++failures;
    }
  }
  std::cout << "seed=" << o.seed << " rounds=" << o.rounds
            << " failures=" << failures << "\n";
  return failures == 0 ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "codes correcting or detecting bounded-magnitude one-sided errors"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* construct = app.add_subcommand(
      "construct", "build a codebook and write it as text");
  auto con = std::make_shared<ConstructOpts>();
  con->common.add_to(construct);
  construct->add_option("--mode", con->mode, "aec, uec, ued, or vt")->required();
  construct->add_option("--construction", con->construction,
                        "uec family: constant-sum, two-level, tail");
  construct->add_option("--j", con->j, "constant-sum level (default: best)");
  construct->add_option("--a", con->a, "ued residue class / vt constant")
      ->each([con](const std::string&) { con->has_a = true; });
  construct->add_option("--r", con->r, "vt offset from the centered constant")
      ->each([con](const std::string&) { con->has_r = true; });
  construct->add_option("--coeffs", con->coeffs,
                        "vt equation coefficients, e.g. \"1 2 4\"");
  construct->add_option("--out", con->out, "output file (default: stdout)");
  construct->callback([&action, con] {
    action = [con] { return cmd_construct(*con); };
  });

  auto* decode = app.add_subcommand("decode", "decode a received word");
  auto dec = std::make_shared<DecodeOpts>();
  decode->add_option("--code", dec->code_file, "codebook file");
  decode->add_option("--mode", dec->mode, "aec, vt, or uec (structured decode)");
  decode->add_option("--q", dec->common.q, "alphabet size");
  decode->add_option("--ell", dec->common.ell, "error magnitude bound");
  decode->add_option("--n", dec->common.n, "code length");
  decode->add_option("--construction", dec->construction,
                     "uec family: constant-sum, two-level, tail");
  decode->add_option("--j", dec->j, "constant-sum level (default: best)");
  decode->add_option("--a", dec->a, "vt constant")
      ->each([dec](const std::string&) { dec->has_a = true; });
  decode->add_option("--r", dec->r, "vt offset");
  decode->add_option("--received", dec->received, "received word, e.g. \"2 2 1\"")
      ->required();
  decode->callback([&action, dec] {
    action = [dec] { return cmd_decode(*dec); };
  });

  auto* count = app.add_subcommand(
      "count", "sizes of the power-coefficient equation code");
  auto cnt = std::make_shared<CountOpts>();
  cnt->common.add_to(count);
  count->add_option("--r", cnt->r, "count at this offset only")
      ->each([cnt](const std::string&) { cnt->has_r = true; });
  count->add_flag("--max", cnt->max, "largest count and its offsets (default)");
  count->add_flag("--table", cnt->table, "full offset table");
  count->callback([&action, cnt] {
    action = [cnt] { return cmd_count(*cnt); };
  });

  auto* table = app.add_subcommand(
      "table", "detection layer sizes and the best residue class");
  auto tab = std::make_shared<CommonOpts>();
  tab->add_to(table);
  table->callback([&action, tab] {
    action = [tab] { return cmd_table(*tab); };
  });

  auto* window = app.add_subcommand(
      "window", "offset window where the equation code is provably largest");
  auto win = std::make_shared<CommonOpts>();
  win->add_to(window);
  window->callback([&action, win] {
    action = [win] { return cmd_window(*win); };
  });

  auto* scan = app.add_subcommand(
      "scan", "best constant for a fixed coefficient vector");
  auto scn = std::make_shared<CommonOpts>();
  auto scn_coeffs = std::make_shared<std::string>();
  scn->add_to(scan);
  scan->add_option("--coeffs", *scn_coeffs, "coefficients, e.g. \"1 3\"")
      ->required();
  scan->callback([&action, scn, scn_coeffs] {
    action = [scn, scn_coeffs] { return cmd_scan(*scn, *scn_coeffs); };
  });

  auto* verify = app.add_subcommand(
      "verify", "check a codebook file against its mode's guarantee");
  auto ver = std::make_shared<std::string>();
  verify->add_option("--code", *ver, "codebook file")->required();
  verify->callback([&action, ver] {
    action = [ver] { return cmd_verify(*ver); };
  });

  auto* orc = app.add_subcommand(
      "oracle", "exact maximum code size by branch-and-bound search");
  auto oro = std::make_shared<OracleOpts>();
  oro->common.add_to(orc);
  orc->add_option("--mode", oro->mode, "aec, uec, or ued")->required();
  orc->add_flag("--witness", oro->witness, "also print the canonical code");
  orc->add_option("--cap", oro->cap, "vertex cap (default: LMEC_ORACLE_CAP or 20000)");
  orc->add_option("--out", oro->out, "write the witness codebook here");
  orc->callback([&action, oro] {
    action = [oro] { return cmd_oracle(*oro); };
  });

  auto* report = app.add_subcommand(
      "report", "bounds, construction sizes, exact values, and checks");
  auto rep = std::make_shared<ReportOpts>();
  rep->common.add_to(report);
  report->add_option("--format", rep->format, "text or json");
  report->add_option("--cap", rep->cap, "oracle vertex cap");
  report->callback([&action, rep] {
    action = [rep] { return cmd_report(*rep); };
  });

  auto* simulate = app.add_subcommand(
      "simulate", "random-error decoding rounds with a fixed seed");
  auto sim = std::make_shared<SimulateOpts>();
  sim->common.add_to(simulate);
  simulate->add_option("--mode", sim->mode, "aec, uec, or vt");
  simulate->add_option("--construction", sim->construction,
                       "uec family: constant-sum, two-level, tail");
  simulate->add_option("--j", sim->j, "constant-sum level (default: best)");
  simulate->add_option("--r", sim->r, "vt offset");
  simulate->add_option("--seed", sim->seed, "RNG seed")->required();
  simulate->add_option("--rounds", sim->rounds, "number of rounds");
  simulate->callback([&action, sim] {
    action = [sim] { return cmd_simulate(*sim); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const lmec::DecodeFailure& e) {
    std::cerr << "decode failure: " << e.what() << "\n";
    return 3;
  } catch (const lmec::ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 4;
  } catch (const lmec::OutOfAlphabetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
