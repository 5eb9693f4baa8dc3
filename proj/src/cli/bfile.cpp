#include "binomid/bfile.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace binomid::cli {

namespace {

std::optional<BigInt> parse_int(const std::string &tok) {
  BigInt v;
  const std::string body = !tok.empty() && tok.front() == '+' ? tok.substr(1) : tok;
  if (body.empty() || v.set_str(body, 10) != 0)
    return std::nullopt;
  return v;
}

} // namespace

Sequence read_bfile(std::istream &in, const std::string &name, std::size_t skip) {
  std::vector<BigInt> values;
  std::optional<BigInt> last_index;
  std::size_t data_lines = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream tokens(line);
    std::string index_tok, value_tok, extra;
    if (!(tokens >> index_tok))
      continue;
    if (!(tokens >> value_tok))
      throw bfile_error("expected 'index value'", lineno);
    if (tokens >> extra)
      throw bfile_error("unexpected token '" + extra + "'", lineno);
    const auto index = parse_int(index_tok);
    if (!index)
      throw bfile_error("index is not an integer: '" + index_tok + "'", lineno);
    const auto value = parse_int(value_tok);
    if (!value)
      throw bfile_error("value is not an integer: '" + value_tok + "'", lineno);
    if (last_index && *index != *last_index + 1)
      throw bfile_error("gap: index " + index->get_str() + " follows " +
                            last_index->get_str(),
                        lineno);
    last_index = index;
    if (data_lines++ < skip)
      continue;
    if (*value == 0)
      throw bfile_error("zero value at index " + index->get_str(), lineno);
    values.push_back(*value);
  }
  if (values.empty())
    throw bfile_error("no data lines", 0);
  return from_list(std::move(values), name);
}

Sequence ingest_bfile(const std::string &path, std::size_t skip) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  return read_bfile(in, "bfile:" + path, skip);
}

} // namespace binomid::cli
