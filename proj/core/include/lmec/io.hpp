#pragma once

#include <iosfwd>
#include <string>

#include "lmec/types.hpp"

namespace lmec::io {

// Text format: header line "q=<q> l=<ell> n=<n> mode=<mode>", then one word
// per line as space-separated decimal symbols, lexicographically sorted.
// Lines starting with '#' are comments.
void write_codebook(std::ostream& out, const Codebook& c);
void write_codebook_file(const std::string& path, const Codebook& c);

Codebook read_codebook(std::istream& in);
Codebook read_codebook_file(const std::string& path);

}  // namespace lmec::io
