#include "cli.hpp"

#include <hexstrip/hexstrip.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

namespace hexstrip::cli {
namespace {

constexpr const char* kErrata = R"(Known misprints in the source tables and formulas:

1. Tribonacci table: the term T_8 is printed as 27. The recurrence
   T_8 = T_7 + T_6 + T_5 = 13 + 7 + 4 gives 24, and the t-triangle row n=6
   (13, 10, 1) also sums to g_6 = T_8 = 24. Later terms (44, 81) are correct.

2. COL-MONO-ODD: the odd-length first-monomer identity is printed as
     h_{2n-1} = a * sum_{k=0}^{n} b^k h_{n-2k-1} F_{k+2}
   which fails from n = 2 on (h_3 = a^3 + 3ab but the sum gives a^2).
   The summand index must be 2n-2k-2:
     h_{2n-1} = a * sum_{k=0}^{n} b^k h_{2n-2k-2} F_{k+2}
   `verify --id COL-MONO-ODD` checks the corrected form;
   add --printed-index to check the printed one.
)";

struct CountArgs {
  std::string family;
  long n = 0;
  long k = 0;
  long l = 0;
  std::string format = "value";
  long offset = 0;
};

struct TriangleArgs {
  std::string family;
  long rows = 0;
  std::string format = "plain";
};

struct PolyArgs {
  long n = 0;
  std::string format = "plain";
};

struct EnumerateArgs {
  std::string model;
  int n = 0;
  bool stats = false;
  bool words = false;
  int cap = kDefaultEnumerationCap;
};

struct VerifyArgs {
  std::string id;
  long max_n = 40;
  std::string format = "json";
  bool printed_index = false;
};

/// Value of `family` at index n (k, l where used).
std::function<BigCount(long)> count_function(const CountArgs& args) {
  const auto& f = args.family;
  const long k = args.k;
  const long l = args.l;
  static const std::map<std::string, SequenceKind> sequences = {
      {"fib", SequenceKind::Fibonacci}, {"tri", SequenceKind::Tribonacci}, {"tetra", SequenceKind::Tetranacci},
      {"nar", SequenceKind::Narayana},  {"pad", SequenceKind::Padovan},
  };
  if (auto it = sequences.find(f); it != sequences.end()) {
    return [kind = it->second](long n) { return seq(kind, n); };
  }
  if (f == "h") return [](long n) { return h(n); };
  if (f == "g") return [](long n) { return g(n); };
  if (f == "c") return [k](long n) { return c(n, k); };
  if (f == "t") return [k](long n) { return t(n, k); };
  if (f == "u") return [k](long n) { return u(n, k); };
  if (f == "v") return [k](long n) { return v(n, k); };
  if (f == "gkl") return [k, l](long n) { return g_kl(n, k, l); };
  throw UnknownName("unknown family '" + f + "'");
}

int run_count(const CountArgs& args, std::ostream& out) {
  const auto value = count_function(args);
  if (args.format == "bfile") {
    std::vector<BigCount> values;
    for (long n = args.offset; n <= args.n; ++n) values.push_back(value(n));
    out << to_bfile(values, args.offset);
  } else {
    out << value(args.n).get_str() << '\n';
  }
  return kExitOk;
}

int run_triangle(const TriangleArgs& args, std::ostream& out) {
  const Triangle tri = triangle(args.family, args.rows);
  if (args.format == "csv") {
    out << to_csv(tri);
  } else if (args.format == "json") {
    out << to_json(tri) << '\n';
  } else if (args.format == "bfile") {
    out << to_bfile(tri);
  } else {
    out << to_plain(tri);
  }
  return kExitOk;
}

int run_poly(const PolyArgs& args, std::ostream& out) {
  if (args.n < 0) throw IndexError("poly needs n >= 0");
  const BivarPoly poly = h_colored(args.n);
  if (args.format == "json") {
    std::string terms;
    for (const auto& [exps, coeff] : poly.terms()) {
      if (!terms.empty()) terms += ',';
      terms += "{\"a\":" + std::to_string(exps.first) + ",\"b\":" + std::to_string(exps.second) +
               ",\"coeff\":" + json_number(coeff) + "}";
    }
    out << "{\"n\":" << args.n << ",\"terms\":[" << terms << "]}\n";
  } else {
    out << poly.to_string() << '\n';
  }
  return kExitOk;
}

int run_enumerate(const EnumerateArgs& args, std::ostream& out) {
  const TileModel model = parse_tile_model(args.model);
  const EnumerationOptions options{args.cap};
  if (args.stats) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& [stats, count] : count_by_statistics(args.n, model, options)) {
      doc[statistics_key(stats, model)] = count.get_ui();
    }
    out << doc.dump() << '\n';
  } else if (args.words) {
    for_each_tiling(args.n, model, [&](const Tiling& tiling) { out << to_block_word(tiling).letters() << '\n'; },
                    options);
  } else {
    for_each_tiling(args.n, model, [&](const Tiling& tiling) { out << to_json(tiling) << '\n'; }, options);
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& args, std::ostream& out) {
  VerifyOptions options;
  if (args.printed_index) options.mono_odd_form = MonoOddForm::Printed;

  std::vector<VerificationReport> reports;
  if (args.id.empty()) {
    reports = verify_all(args.max_n, options);
  } else {
    const IdentityId id = parse_identity(args.id);
    reports.push_back(verify(id, default_range(id, args.max_n), options));
  }

  for (const auto& report : reports) {
    if (args.format == "json") {
      out << to_json(report) << '\n';
    } else {
      out << name(report.id) << ' ' << (report.passed() ? "pass" : "FAIL");
      if (report.counterexample) {
        const auto& ce = *report.counterexample;
        out << " at n=" << ce.n;
        if (ce.m) out << " m=" << *ce.m;
        out << ": " << ce.lhs << " != " << ce.rhs;
      }
      out << '\n';
    }
  }
  return all_passed(reports) ? kExitOk : kExitVerifyFailed;
}

int environment_cap() {
  const char* text = std::getenv("HEXSTRIP_CAP");
  if (text == nullptr || *text == '\0') return kDefaultEnumerationCap;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(text, &used);
    if (used != std::string(text).size() || cap < 0) throw std::invalid_argument(text);
    return cap;
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("HEXSTRIP_CAP", "must be a non-negative integer, got '" + std::string(text) + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts, triangles, polynomials and identities for honeycomb-strip tilings", "hexstrip"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Print one exact value");
  count->add_option("--family", count_args.family, "h|g|fib|tri|tetra|nar|pad|c|t|u|v|gkl")
      ->required()
      ->check(CLI::IsMember({"h", "g", "fib", "tri", "tetra", "nar", "pad", "c", "t", "u", "v", "gkl"}));
  count->add_option("--n", count_args.n, "Index n")->required();
  auto* k_opt = count->add_option("--k", count_args.k, "Second index (c, t, u, v, gkl)");
  auto* l_opt = count->add_option("--l", count_args.l, "Dimer count (gkl)");
  count->add_option("--format", count_args.format, "value|bfile")->check(CLI::IsMember({"value", "bfile"}));
  count->add_option("--offset", count_args.offset, "First index listed by --format bfile");

  TriangleArgs triangle_args;
  auto* tri = app.add_subcommand("triangle", "Print rows 0..R of a number triangle");
  tri->add_option("--family", triangle_args.family, "c|t|u|v")->required();
  tri->add_option("--rows", triangle_args.rows, "Last row index R")->required()->check(CLI::NonNegativeNumber);
  tri->add_option("--format", triangle_args.format, "plain|csv|json|bfile")
      ->check(CLI::IsMember({"plain", "csv", "json", "bfile"}));

  PolyArgs poly_args;
  auto* poly = app.add_subcommand("poly", "Print the colour-weighted polynomial h^{a,b}_N");
  poly->add_option("--n", poly_args.n, "Strip length N")->required()->check(CLI::NonNegativeNumber);
  poly->add_option("--format", poly_args.format, "plain|json")->check(CLI::IsMember({"plain", "json"}));

  EnumerateArgs enumerate_args;
  enumerate_args.cap = kDefaultEnumerationCap;
  auto* enumerate = app.add_subcommand("enumerate", "List every tiling of a strip (JSON lines)");
  enumerate->add_option("--model", enumerate_args.model, "md|mdt")
      ->required()
      ->check(CLI::IsMember({"md", "mdt", "MD", "MDT"}));
  enumerate->add_option("--n", enumerate_args.n, "Strip length")->required()->check(CLI::NonNegativeNumber);
  auto* stats_flag = enumerate->add_flag("--stats", enumerate_args.stats, "Histogram by tile counts");
  auto* words_flag = enumerate->add_flag("--words", enumerate_args.words, "Block words instead of tilings");
  stats_flag->excludes(words_flag);
  auto* cap_opt = enumerate->add_option("--cap", enumerate_args.cap, "Largest n allowed (default 22, env HEXSTRIP_CAP)")
                      ->check(CLI::NonNegativeNumber);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities exactly; exit 1 on any failure");
  verify_cmd->add_option("--id", verify_args.id, "Single identity, e.g. TRI-2T");
  verify_cmd->add_option("--max-n", verify_args.max_n, "Largest n (and m) checked");
  verify_cmd->add_option("--format", verify_args.format, "json|plain")->check(CLI::IsMember({"json", "plain"}));
  verify_cmd->add_flag("--printed-index", verify_args.printed_index,
                       "Check COL-MONO-ODD with the misprinted summand index");

  auto* errata = app.add_subcommand("errata", "List known misprints in the source tables");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (count->parsed()) {
      const auto& f = count_args.family;
      const bool needs_k = f == "c" || f == "t" || f == "u" || f == "v" || f == "gkl";
      if (needs_k && k_opt->count() == 0) throw CLI::RequiredError("--k is required for family " + f);
      if (f == "gkl" && l_opt->count() == 0) throw CLI::RequiredError("--l is required for family gkl");
      return run_count(count_args, out);
    }
    if (tri->parsed()) return run_triangle(triangle_args, out);
    if (poly->parsed()) return run_poly(poly_args, out);
    if (enumerate->parsed()) {
      if (cap_opt->count() == 0) enumerate_args.cap = environment_cap();
      return run_enumerate(enumerate_args, out);
    }
    if (verify_cmd->parsed()) return run_verify(verify_args, out);
    if (errata->parsed()) {
      out << kErrata;
      return kExitOk;
    }
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::Error& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const std::exception& e) {
    // Domain errors from the library (negative index, cap exceeded, unknown
    // identity, ...) are reported as usage errors.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hexstrip::cli
