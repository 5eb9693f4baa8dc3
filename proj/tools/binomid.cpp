// binomid: generalized binomial triangles, pyramids and sequence
// classification from the command line.
//
// Exit codes: 0 success / property holds, 1 a classification or check
// failed (witness printed), 2 usage, parse or input errors, 3 internal
// cross-check failure.

#include "binomid/bfile.hpp"
#include "binomid/classify.hpp"
#include "binomid/core.hpp"
#include "binomid/errors.hpp"
#include "binomid/format.hpp"
#include "binomid/seqspec.hpp"
#include "binomid/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

using namespace binomid;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_internal = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Sequence load(const std::string &text, std::size_t skip) {
  return cli::evaluate(cli::parse_seqspec(text), {skip});
}

int emit_verdict(const CheckResult &r, const std::string &what) {
  if (r.holds) {
    std::cout << what << ": holds (" << r.cases << " cases)\n";
    return exit_ok;
  }
  std::cout << what << ": FAILS  " << r.failure.value_or("") << '\n';
  return exit_failed;
}

std::int64_t int_arg(const std::vector<std::string> &args, std::size_t i,
                     const std::string &check) {
  if (i >= args.size())
    throw usage_error("verify " + check + ": missing argument " + std::to_string(i + 1));
  try {
    std::size_t used = 0;
    const long long v = std::stoll(args[i], &used);
    if (used != args[i].size())
      throw std::invalid_argument(args[i]);
    return v;
  } catch (const std::logic_error &) {
    throw usage_error("verify " + check + ": not an integer: '" + args[i] + "'");
  }
}

void expect_args(const std::vector<std::string> &args, std::size_t lo, std::size_t hi,
                 const std::string &check) {
  if (args.size() < lo || args.size() > hi)
    throw usage_error("verify " + check + ": expected " + std::to_string(lo) +
                      (lo == hi ? "" : "-" + std::to_string(hi)) + " arguments");
}

// Identity suite at the documented scale.
int verify_suite() {
  int status = exit_ok;
  auto step = [&](const CheckResult &r, const std::string &what) {
    if (emit_verdict(r, what) != exit_ok)
      status = exit_failed;
  };
  for (const auto &f : {identity_seq(), fibonacci(), g_q(2)})
    step(check_slice_identity(f, 8, 6, 8), "slice-identity " + f.name());
  CheckResult det;
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t n = m; n <= 8; ++n)
      for (std::int64_t k = 1; k <= 4; ++k) {
        const auto r = check_determinant_identity(n, m, k);
        det.cases += r.cases;
        if (!r.holds && det.holds) {
          det.holds = false;
          det.failure = r.failure;
        }
      }
  step(det, "determinant");
  CheckResult cyc;
  for (std::int64_t n = 1; n <= 60; ++n)
    for (long a = -5; a <= 5; ++a)
      for (long b = -5; b <= 5; ++b) {
        const auto r = check_cyclotomic_product(n, a, b);
        ++cyc.cases;
        if (!r.holds && cyc.holds) {
          cyc.holds = false;
          cyc.failure = r.failure;
        }
      }
  step(cyc, "cyclotomic-product");
  CheckResult hm;
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t n = 0; n <= 8; ++n)
      for (std::int64_t k = 0; k <= n; ++k) {
        const auto r = check_hm_identity(m, n, k);
        hm.cases += r.cases;
        if (!r.holds && hm.holds) {
          hm.holds = false;
          hm.failure = r.failure;
        }
      }
  step(hm, "hm-identity");
  CheckResult pattern, window;
  for (std::int64_t r = 1; r <= 12; ++r)
    for (std::int64_t m = 0; m < r; ++m) {
      const auto p = check_delta_pattern(m, r, 3 * r);
      const auto w = check_window_minimality(m, r, 3 * r, 3 * r);
      pattern.cases += p.cases;
      window.cases += w.cases;
      if (!p.holds && pattern.holds)
        pattern = p;
      if (!w.holds && window.holds)
        window = w;
    }
  step(pattern, "delta-pattern");
  step(window, "window-minimality");
  return status;
}

int run_verify(const std::string &check, const std::vector<std::string> &args,
               std::size_t skip) {
  if (check == "suite") {
    expect_args(args, 0, 0, check);
    return verify_suite();
  }
  if (check == "delta-pattern") {
    expect_args(args, 3, 3, check);
    return emit_verdict(check_delta_pattern(int_arg(args, 0, check), int_arg(args, 1, check),
                                            int_arg(args, 2, check)),
                        check);
  }
  if (check == "window-minimality") {
    expect_args(args, 4, 4, check);
    return emit_verdict(check_window_minimality(int_arg(args, 0, check), int_arg(args, 1, check),
                                                int_arg(args, 2, check),
                                                int_arg(args, 3, check)),
                        check);
  }
  if (check == "generic-entry") {
    expect_args(args, 3, 3, check);
    const auto v = generic_pyramid_entry(int_arg(args, 0, check), int_arg(args, 1, check),
                                         int_arg(args, 2, check));
    std::cout << v.to_string() << '\n';
    return exit_ok;
  }
  if (check == "symmetry") {
    expect_args(args, 1, 1, check);
    return emit_verdict(check_symmetry(load(args[0], skip)), check);
  }
  if (check == "slice-identity") {
    expect_args(args, 4, 4, check);
    return emit_verdict(check_slice_identity(load(args[0], skip), int_arg(args, 1, check),
                                             int_arg(args, 2, check), int_arg(args, 3, check)),
                        check);
  }
  if (check == "determinant") {
    expect_args(args, 3, 3, check);
    return emit_verdict(check_determinant_identity(int_arg(args, 0, check),
                                                   int_arg(args, 1, check),
                                                   int_arg(args, 2, check)),
                        check);
  }
  if (check == "recurrence") {
    expect_args(args, 3, 5, check);
    if (args.size() == 4)
      throw usage_error("verify recurrence: give both u and v or neither");
    std::optional<BigInt> u, v;
    if (args.size() == 5) {
      u = BigInt(int_arg(args, 3, check));
      v = BigInt(int_arg(args, 4, check));
    }
    const auto r = check_recurrence_step(load(args[0], skip), int_arg(args, 1, check),
                                         int_arg(args, 2, check), u, v);
    std::cout << check << ": " << to_string(r.outcome) << "  u = " << r.u << "  v = " << r.v;
    if (r.outcome == RecurrenceOutcome::holds || r.outcome == RecurrenceOutcome::conclusion_fails)
      std::cout << "  lhs = " << r.lhs << "  rhs = " << r.rhs;
    std::cout << '\n';
    return r.outcome == RecurrenceOutcome::holds ? exit_ok : exit_failed;
  }
  if (check == "hm") {
    expect_args(args, 3, 3, check);
    return emit_verdict(check_hm_identity(int_arg(args, 0, check), int_arg(args, 1, check),
                                          int_arg(args, 2, check)),
                        check);
  }
  if (check == "cyclotomic") {
    expect_args(args, 3, 3, check);
    return emit_verdict(check_cyclotomic_product(int_arg(args, 0, check),
                                                 BigInt(int_arg(args, 1, check)),
                                                 BigInt(int_arg(args, 2, check))),
                        check);
  }
  throw usage_error("verify: unknown check '" + check + "'");
}

const std::vector<std::string> property_names{
    "binomid",  "binomid_at_level", "binomid_every_level", "divisor_chain",
    "divisible", "gcd_sequence",    "dual_gcd",            "divisor_product",
    "multiplicative", "homomorphic"};

std::vector<ClassificationReport> run_classify(const Sequence &f, std::int64_t bound,
                                               std::int64_t levels,
                                               std::vector<std::string> props) {
  if (props.empty())
    props = property_names;
  auto wanted = [&](const std::string &p) {
    return std::find(props.begin(), props.end(), p) != props.end();
  };
  std::vector<ClassificationReport> out;
  if (wanted("binomid")) out.push_back(is_binomid(f, bound));
  if (wanted("binomid_at_level"))
    for (std::int64_t c = 1; c <= levels; ++c)
      out.push_back(is_binomid_at_level(f, c, bound));
  if (wanted("binomid_every_level")) out.push_back(is_binomid_every_level(f, levels, bound));
  if (wanted("divisor_chain")) out.push_back(is_divisor_chain(f, bound));
  if (wanted("divisible")) out.push_back(is_divisible(f, bound));
  if (wanted("gcd_sequence")) out.push_back(is_gcd_sequence(f, bound));
  if (wanted("dual_gcd")) out.push_back(is_dual_gcd(f, bound));
  if (wanted("divisor_product")) out.push_back(is_divisor_product(f, bound));
  if (wanted("multiplicative")) out.push_back(is_multiplicative(f, bound));
  if (wanted("homomorphic")) out.push_back(is_homomorphic(f, bound));
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Generalized binomial triangles, binomid pyramids and sequence classification"};
  app.require_subcommand(1);
  std::size_t skip = 0;
  app.add_option("--bfile-skip", skip, "Data lines dropped from the start of each b-file");

  std::string spec_text, format = "text";
  std::int64_t rows = 0, depth = 0, bound = 0, levels = 2, terms = 0;
  const std::vector<std::string> formats{"text", "csv", "json"};

  auto *tri = app.add_subcommand("triangle", "Print the binomid triangle of a sequence");
  tri->add_option("spec", spec_text, "Sequence spec")->required();
  tri->add_option("--rows", rows, "Last row index N")->required()->check(CLI::NonNegativeNumber);
  tri->add_option("--format", format)->check(CLI::IsMember(formats));

  auto *pyr = app.add_subcommand("pyramid", "Print the binomid pyramid slices");
  pyr->add_option("spec", spec_text, "Sequence spec")->required();
  pyr->add_option("--depth", depth, "Last slice index D")->required()->check(CLI::NonNegativeNumber);
  pyr->add_option("--format", format)->check(CLI::IsMember(formats));

  std::vector<std::string> props;
  auto *cls = app.add_subcommand("classify", "Run the divisibility property battery");
  cls->add_option("spec", spec_text, "Sequence spec")->required();
  cls->add_option("--bound", bound, "Search bound B")->required()->check(CLI::PositiveNumber);
  cls->add_option("--levels", levels, "Deepest level D for level checks")
      ->check(CLI::NonNegativeNumber);
  cls->add_option("--property", props, "Restrict to these properties")
      ->check(CLI::IsMember(property_names));
  cls->add_option("--format", format)->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));

  auto *inv = app.add_subcommand("invert", "Moebius-invert a sequence: f = P(g), print g");
  inv->add_option("spec", spec_text, "Sequence spec")->required();
  inv->add_option("--terms", terms, "Number of terms")->required()->check(CLI::NonNegativeNumber);

  std::string check;
  std::vector<std::string> check_args;
  auto *ver = app.add_subcommand("verify", "Run an identity checker");
  ver->add_option("check", check,
                  "suite | delta-pattern | window-minimality | generic-entry | symmetry | "
                  "slice-identity | determinant | recurrence | hm | cyclotomic")
      ->required();
  ver->add_option("args", check_args, "Check arguments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*tri) {
      const Triangle t = triangle(load(spec_text, skip), rows);
      if (format == "json")
        std::cout << cli::triangle_json(t).dump(2) << '\n';
      else
        std::cout << (format == "csv" ? cli::triangle_csv(t) : cli::triangle_text(t));
      return exit_ok;
    }
    if (*pyr) {
      const Pyramid p = pyramid(load(spec_text, skip), depth);
      if (format == "json")
        std::cout << cli::pyramid_json(p).dump(2) << '\n';
      else
        std::cout << (format == "csv" ? cli::pyramid_csv(p) : cli::pyramid_text(p));
      return exit_ok;
    }
    if (*cls) {
      const Sequence f = load(spec_text, skip);
      const auto reports = run_classify(f, bound, levels, props);
      bool all_hold = true;
      nlohmann::json doc = nlohmann::json::array();
      for (const auto &r : reports) {
        all_hold = all_hold && r.holds();
        if (format == "json") {
          doc.push_back(cli::report_json(r));
          continue;
        }
        std::cout << cli::report_line(r) << '\n';
        for (const auto &note : r.notes)
          std::cout << "  note: " << note << '\n';
      }
      if (format == "json")
        std::cout << doc.dump(2) << '\n';
      return all_hold ? exit_ok : exit_failed;
    }
    if (*inv) {
      const auto g = mobius_invert(load(spec_text, skip), terms);
      for (std::size_t i = 0; i < g.size(); ++i)
        std::cout << (i ? " " : "") << g[i];
      std::cout << '\n';
      return exit_ok;
    }
    if (*ver)
      return run_verify(check, check_args, skip);
  } catch (const internal_error &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_internal;
  } catch (const cli::parse_error &e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
