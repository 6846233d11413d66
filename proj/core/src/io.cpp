#include "lmec/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lmec::io {

namespace {

// "key=value" with a mandatory integer value.
long long field(const std::string& token, const std::string& key) {
  std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0)
    throw std::invalid_argument("codebook header: expected " + prefix +
                                "..., got '" + token + "'");
  try {
    return std::stoll(token.substr(prefix.size()));
  } catch (const std::exception&) {
    throw std::invalid_argument("codebook header: bad value in '" + token + "'");
  }
}

}  // namespace

void write_codebook(std::ostream& out, const Codebook& c) {
  out << "q=" << c.params.q << " l=" << c.params.ell << " n=" << c.params.n
      << " mode=" << mode_name(c.mode) << "\n";
  for (const Word& w : c.words) {
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) out << ' ';
      out << w[i];
    }
    out << "\n";
  }
}

void write_codebook_file(const std::string& path, const Codebook& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_codebook(out, c);
}

Codebook read_codebook(std::istream& in) {
  std::string line;
  std::vector<std::string> tokens;
  // header: first non-comment, non-empty line
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    break;
  }
  std::istringstream header(line);
  std::string tok;
  while (header >> tok) tokens.push_back(tok);
  if (tokens.size() != 4)
    throw std::invalid_argument("codebook header: expected 'q=.. l=.. n=.. mode=..'");
  int q = static_cast<int>(field(tokens[0], "q"));
  int ell = static_cast<int>(field(tokens[1], "l"));
  int n = static_cast<int>(field(tokens[2], "n"));
  if (tokens[3].rfind("mode=", 0) != 0)
    throw std::invalid_argument("codebook header: missing mode");
  Mode mode = parse_mode(tokens[3].substr(5));
  CodeParams params(q, ell, n);

  std::vector<Word> words;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    Word w;
    long long s;
    while (row >> s) w.push_back(static_cast<Symbol>(s));
    if (static_cast<int>(w.size()) != n)
      throw std::invalid_argument("codebook row has " +
                                  std::to_string(w.size()) + " symbols, expected " +
                                  std::to_string(n));
    if (!word_in_alphabet(w, params))
      throw std::invalid_argument("codebook row leaves the alphabet");
    words.push_back(std::move(w));
  }
  return make_codebook(params, mode, std::move(words));
}

Codebook read_codebook_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_codebook(in);
}

}  // namespace lmec::io
