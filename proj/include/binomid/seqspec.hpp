#pragma once

// Sequence-spec expressions:
//
//   spec := atom | "product(" spec "," spec ")" | "scalar(" int "," spec ")"
//         | "pow(" uint "," spec ")" | "P(" spec ")" | "col(" uint "," spec ")"
//         | "row(" uint "," spec ")" | "prepend1(" spec ")"
//         | "interleave1(" spec ")" | "double(" spec ")"
//   atom := "I" | "fact" | "T" | "phi" | "fib" | "const:" int | "cpow:" int
//         | "pcol:" uint | "prow:" uint | "gq:" int | "gab:" int "," int
//         | "lucas:" int "," int | "hm:" uint | "list:" int ("," int)*
//         | "file:" path | "bfile:" path
//
// Paths run to the next ',' or ')' or the end of the text.

#include "binomid/rational.hpp"
#include "binomid/sequence.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace binomid::cli {

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string &message, std::size_t offset)
      : std::runtime_error(message + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

struct SeqSpec {
  std::string head;             // atom or combinator name, e.g. "lucas", "col"
  std::vector<BigInt> numbers;  // integer arguments in source order
  std::string path;             // file: and bfile: atoms
  std::vector<SeqSpec> children;

  friend bool operator==(const SeqSpec &, const SeqSpec &) = default;
};

SeqSpec parse_seqspec(std::string_view text);

// Canonical text: no whitespace, integers in decimal.
std::string to_string(const SeqSpec &spec);

struct EvalOptions {
  std::size_t bfile_skip = 0; // data lines dropped from each b-file
};

Sequence evaluate(const SeqSpec &spec, const EvalOptions &options = {});

// Whitespace-, comma- or newline-separated integers; '#' starts a comment.
Sequence ingest_list_file(const std::string &path);

} // namespace binomid::cli
