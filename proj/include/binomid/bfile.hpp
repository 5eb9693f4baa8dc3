#pragma once

#include "binomid/sequence.hpp"

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>

namespace binomid::cli {

class bfile_error : public std::runtime_error {
public:
  bfile_error(const std::string &message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

// OEIS b-file: lines "index value", blank lines and '#' comments ignored,
// indices increasing by exactly 1. The first kept data line becomes term 1;
// `skip` drops that many leading data lines first.
Sequence read_bfile(std::istream &in, const std::string &name, std::size_t skip = 0);
Sequence ingest_bfile(const std::string &path, std::size_t skip = 0);

} // namespace binomid::cli
