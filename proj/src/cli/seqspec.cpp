#include "binomid/seqspec.hpp"

#include "binomid/bfile.hpp"
#include "binomid/core.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

namespace binomid::cli {

namespace {

constexpr std::array combinators{"product", "scalar", "pow",    "P",
                                 "col",     "row",    "prepend1", "interleave1",
                                 "double"};
constexpr std::array bare_atoms{"I", "fact", "T", "phi", "fib"};

bool is_one_of(std::string_view word, const auto &list) {
  for (std::string_view w : list)
    if (w == word)
      return true;
  return false;
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  SeqSpec parse() {
    SeqSpec spec = parse_spec();
    skip_space();
    if (pos_ != text_.size())
      throw parse_error("unexpected trailing input '" + std::string(text_.substr(pos_)) + "'",
                        pos_);
    return spec;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c))
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  BigInt integer(bool allow_negative) {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      if (text_[pos_] == '-' && !allow_negative)
        throw parse_error("expected a nonnegative integer", pos_);
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits)
      throw parse_error(allow_negative ? "expected an integer" : "expected a nonnegative integer",
                        start);
    std::string token(text_.substr(start, pos_ - start));
    if (token.front() == '+')
      token.erase(0, 1);
    return BigInt(token);
  }

  std::string path() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')')
      ++pos_;
    if (pos_ == start)
      throw parse_error("expected a path", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  SeqSpec parse_spec() {
    skip_space();
    const std::size_t start = pos_;
    SeqSpec spec;
    spec.head = word();
    if (spec.head.empty())
      throw parse_error("expected a sequence spec", start);

    if (is_one_of(spec.head, combinators)) {
      expect('(');
      if (spec.head == "scalar") {
        spec.numbers.push_back(integer(true));
        expect(',');
      } else if (spec.head == "pow" || spec.head == "col" || spec.head == "row") {
        spec.numbers.push_back(integer(false));
        expect(',');
      }
      spec.children.push_back(parse_spec());
      if (spec.head == "product") {
        expect(',');
        spec.children.push_back(parse_spec());
      }
      expect(')');
      return spec;
    }
    if (is_one_of(spec.head, bare_atoms)) {
      if (peek(':'))
        throw parse_error("'" + spec.head + "' takes no arguments", pos_);
      return spec;
    }

    if (!peek(':'))
      throw parse_error("unknown sequence '" + spec.head + "'", start);
    ++pos_;
    const std::string &h = spec.head;
    if (h == "const" || h == "cpow" || h == "gq") {
      spec.numbers.push_back(integer(true));
    } else if (h == "pcol" || h == "prow" || h == "hm") {
      spec.numbers.push_back(integer(false));
    } else if (h == "gab" || h == "lucas") {
      spec.numbers.push_back(integer(true));
      expect(',');
      spec.numbers.push_back(integer(true));
    } else if (h == "list") {
      spec.numbers.push_back(integer(true));
      // A comma followed by something that is not an integer belongs to an
      // enclosing combinator.
      while (peek(',')) {
        const std::size_t save = pos_;
        ++pos_;
        skip_space();
        if (pos_ < text_.size() &&
            (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
             text_[pos_] == '+')) {
          spec.numbers.push_back(integer(true));
        } else {
          pos_ = save;
          break;
        }
      }
    } else if (h == "file" || h == "bfile") {
      spec.path = path();
    } else {
      throw parse_error("unknown sequence '" + h + "'", start);
    }
    return spec;
  }
};

long small(const BigInt &v, const char *what) {
  if (!v.fits_slong_p())
    throw std::invalid_argument(std::string(what) + " argument out of range: " + v.get_str());
  return v.get_si();
}

} // namespace

SeqSpec parse_seqspec(std::string_view text) {
  if (text.empty())
    throw parse_error("empty sequence spec", 0);
  return Parser(text).parse();
}

std::string to_string(const SeqSpec &spec) {
  const std::string &h = spec.head;
  if (is_one_of(h, combinators)) {
    std::string out = h + "(";
    for (const auto &n : spec.numbers)
      out += n.get_str() + ",";
    for (std::size_t i = 0; i < spec.children.size(); ++i)
      out += (i ? "," : "") + to_string(spec.children[i]);
    return out + ")";
  }
  if (is_one_of(h, bare_atoms))
    return h;
  if (h == "file" || h == "bfile")
    return h + ":" + spec.path;
  std::string out = h + ":";
  for (std::size_t i = 0; i < spec.numbers.size(); ++i)
    out += (i ? "," : "") + spec.numbers[i].get_str();
  return out;
}

Sequence ingest_list_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::vector<BigInt> values;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    for (char &c : line)
      if (c == ',')
        c = ' ';
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) {
      BigInt v;
      if (v.set_str(tok.front() == '+' ? tok.substr(1) : tok, 10) != 0)
        throw std::runtime_error(path + ": not an integer: '" + tok + "'");
      values.push_back(v);
    }
  }
  return from_list(std::move(values), "file:" + path);
}

Sequence evaluate(const SeqSpec &spec, const EvalOptions &options) {
  const std::string &h = spec.head;
  auto child = [&](std::size_t i) { return evaluate(spec.children.at(i), options); };
  auto num = [&](std::size_t i) -> const BigInt & { return spec.numbers.at(i); };

  if (h == "I") return identity_seq();
  if (h == "fact") return factorial_seq();
  if (h == "T") return triangular_seq();
  if (h == "phi") return euler_phi_seq();
  if (h == "fib") return fibonacci();
  if (h == "const") return const_seq(num(0));
  if (h == "cpow") return power_seq(num(0));
  if (h == "pcol") return pascal_column(small(num(0), "pcol"));
  if (h == "prow") return pascal_row(small(num(0), "prow"));
  if (h == "gq") return g_q(num(0));
  if (h == "gab") return g_ab(num(0), num(1));
  if (h == "lucas") return lucas(num(0), num(1));
  if (h == "hm") return h_m(small(num(0), "hm"));
  if (h == "list") return from_list(spec.numbers);
  if (h == "file") return ingest_list_file(spec.path);
  if (h == "bfile") return ingest_bfile(spec.path, options.bfile_skip);
  if (h == "product") return product(child(0), child(1));
  if (h == "scalar") return scalar(num(0), child(0));
  if (h == "pow") return compose_power(static_cast<unsigned>(small(num(0), "pow")), child(0));
  if (h == "P") return divisor_product_of(child(0));
  if (h == "col") return col_seq(child(0), small(num(0), "col"));
  if (h == "row") return row_seq(child(0), small(num(0), "row"));
  if (h == "prepend1") return prepend_one(child(0));
  if (h == "interleave1") return interleave_ones(child(0));
  if (h == "double") return double_terms(child(0));
  throw std::invalid_argument("unknown sequence head '" + h + "'");
}

} // namespace binomid::cli
