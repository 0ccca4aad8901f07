// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Values are exact; the only tolerances are the wall-clock limits.

#include <cli.hpp>
#include <hexstrip/hexstrip.hpp>

#include <subset_cover.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace hexstrip;

namespace {

using Rows = std::vector<std::vector<BigCount>>;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;  // <= 0: no limit
  std::function<Outcome()> body;
};

std::string cli_out(std::vector<std::string> args, int* code = nullptr) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  if (code) *code = rc;
  return out.str();
}

std::string str(long x) { return std::to_string(x); }

Outcome dimer_triangle() {
  Outcome o;
  const Rows expected = {{1}, {1}, {1, 1}, {1, 3}, {1, 5, 2}, {1, 7, 7}, {1, 9, 16, 3}, {1, 11, 29, 15},
                         {1, 13, 46, 43, 5}};
  const std::vector<long> row_sums = {1, 1, 2, 4, 8, 15, 29, 56, 108};
  int code = -1;
  const std::string csv = cli_out({"triangle", "--family", "c", "--rows", "8", "--format", "csv"}, &code);
  o.require(code == cli::kExitOk, "cli exit code " + str(code));
  const Triangle tri = triangle_from_csv("c", csv);
  o.require(tri.rows == expected, "rows differ:\n" + csv);
  std::size_t entries = 0;
  for (std::size_t n = 0; n < tri.rows.size(); ++n) {
    BigCount sum = 0;
    for (const auto& x : tri.rows[n]) sum += x;
    entries += tri.rows[n].size();
    o.require(sum == row_sums[n], "row sum at n=" + str(static_cast<long>(n)));
  }
  o.require(entries == 25, "entry count " + str(static_cast<long>(entries)));
  o.require(cli_out({"triangle", "--family", "c", "--rows", "8"}) == to_plain(Triangle{"c", expected}),
            "plain rendering differs");
  return o;
}

Outcome coloured_polynomials() {
  Outcome o;
  const std::vector<std::string> expected = {
      "1", "a", "a^2 + b", "a^3 + 3*a*b", "a^4 + 5*a^2*b + 2*b^2", "a^5 + 7*a^3*b + 7*a*b^2",
      "a^6 + 9*a^4*b + 16*a^2*b^2 + 3*b^3"};
  for (long n = 0; n <= 6; ++n) {
    const std::string got = h_colored(n).to_string();
    o.require(got == expected[static_cast<std::size_t>(n)], "n=" + str(n) + ": " + got);
    o.require(cli_out({"poly", "--n", str(n)}) == expected[static_cast<std::size_t>(n)] + "\n", "cli n=" + str(n));
  }
  BivarPoly six;
  six.add_term(1, 6, 0);
  six.add_term(9, 4, 1);
  six.add_term(16, 2, 2);
  six.add_term(3, 0, 3);
  o.require(h_colored(6) == six, "coefficients at n=6");
  return o;
}

Outcome trimer_triangles() {
  Outcome o;
  const Rows t_rows = {{1}, {1}, {2}, {3, 1}, {5, 2}, {8, 5}, {13, 10, 1}, {21, 20, 3}, {34, 38, 9}};
  const Rows u_rows = {{1},          {1},           {1, 1},          {2, 2},           {3, 3, 1},
                       {4, 6, 3},    {6, 11, 6, 1}, {9, 18, 13, 4},  {13, 30, 27, 10, 1}};
  const Rows v_rows = {{1},
                       {0, 1},
                       {1, 0, 1},
                       {1, 2, 0, 1},
                       {1, 2, 3, 0, 1},
                       {2, 3, 3, 4, 0, 1},
                       {2, 6, 6, 4, 5, 0, 1},
                       {3, 7, 12, 10, 5, 6, 0, 1},
                       {4, 12, 16, 20, 15, 6, 7, 0, 1}};
  const std::pair<const char*, const Rows*> cases[] = {{"t", &t_rows}, {"u", &u_rows}, {"v", &v_rows}};
  for (const auto& [family, rows] : cases) {
    const std::string csv = cli_out({"triangle", "--family", family, "--rows", "8", "--format", "csv"});
    o.require(triangle_from_csv(family, csv).rows == *rows, std::string(family) + " rows differ:\n" + csv);
  }
  return o;
}

oracle::Histogram library_histogram(int n, TileModel model) {
  oracle::Histogram out;
  for (const auto& [s, count] : count_by_statistics(n, model)) {
    out[{static_cast<int>(s.monomers), static_cast<int>(s.dimers), static_cast<int>(s.trimers)}] = count.get_ui();
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  const std::pair<long, long> weights[] = {{1, 1}, {2, 1}, {1, 2}, {3, 5}};
  for (int n = 0; n <= 14 && o.ok; ++n) {
    const auto hist = library_histogram(n, TileModel::MD);
    o.require(hist == oracle::subset_cover_histogram(n, oracle::Model::MD), "MD enumerator vs oracle n=" + str(n));
    std::vector<BigCount> by_dimers(static_cast<std::size_t>(n / 2 + 1));
    for (const auto& [key, count] : hist) by_dimers[static_cast<std::size_t>(std::get<1>(key))] += count;
    for (long k = 0; k <= n / 2; ++k) {
      o.require(c(n, k) == by_dimers[static_cast<std::size_t>(k)], "c(" + str(n) + "," + str(k) + ")");
    }
    for (auto [a, b] : weights) {
      o.require(weighted_count(n, a, b) == h_colored(n).evaluate(a, b),
                "weighted n=" + str(n) + " (" + str(a) + "," + str(b) + ")");
    }
  }
  for (int n = 0; n <= 16 && o.ok; ++n) {
    const auto hist = library_histogram(n, TileModel::MDT);
    o.require(hist == oracle::subset_cover_histogram(n, oracle::Model::MDT), "MDT enumerator vs oracle n=" + str(n));
    const auto width = static_cast<std::size_t>(n + 1);
    std::vector<BigCount> by_trimers(width), by_dimers(width), by_monomers(width);
    for (const auto& [key, count] : hist) {
      const auto [monomers, dimers, trimers] = key;
      o.require(g_kl(n, trimers, dimers) == count, "g_kl(" + str(n) + "," + str(trimers) + "," + str(dimers) + ")");
      by_trimers[static_cast<std::size_t>(trimers)] += count;
      by_dimers[static_cast<std::size_t>(dimers)] += count;
      by_monomers[static_cast<std::size_t>(monomers)] += count;
    }
    for (long k = 0; k <= n; ++k) {
      const auto i = static_cast<std::size_t>(k);
      o.require(t(n, k) == by_trimers[i], "t(" + str(n) + "," + str(k) + ")");
      o.require(u(n, k) == by_dimers[i], "u(" + str(n) + "," + str(k) + ")");
      o.require(v(n, k) == by_monomers[i], "v(" + str(n) + "," + str(k) + ")");
      for (long l = 0; l <= n; ++l) {
        if (g_kl(n, k, l) != 0) o.require(hist.count({n - 3 * k - 2 * l, l, k}) == 1, "g_kl support");
      }
    }
  }
  return o;
}

Outcome closed_forms() {
  Outcome o;
  for (long n = 0; n <= 60; ++n) {
    for (long k = 0; k <= n / 2; ++k) o.require(c(n, k) == c_closed(n, k), "c_closed(" + str(n) + "," + str(k) + ")");
  }
  for (long n = 0; n <= 40; ++n) {
    for (long k = 0; k <= n; ++k) {
      o.require(t(n, k) == t_conv(n, k), "t_conv(" + str(n) + "," + str(k) + ")");
      o.require(u(n, k) == u_conv(n, k), "u_conv(" + str(n) + "," + str(k) + ")");
      o.require(v(n, k) == v_conv(n, k), "v_conv(" + str(n) + "," + str(k) + ")");
      BigCount over_l = 0, over_k = 0;
      for (long j = 0; j <= n; ++j) {
        over_l += g_kl(n, k, j);
        over_k += g_kl(n, j, k);
      }
      o.require(over_l == t(n, k), "sum_l g_kl != t at (" + str(n) + "," + str(k) + ")");
      o.require(over_k == u(n, k), "sum_k g_kl != u at (" + str(n) + "," + str(k) + ")");
    }
  }
  return o;
}

Outcome identity_suite() {
  Outcome o;
  const auto reports = verify_all(40);
  o.require(reports.size() == 15, "report count " + str(static_cast<long>(reports.size())));
  for (const auto& r : reports) {
    o.require(r.passed(), to_json(r));
    o.require(r.range.n.hi == 40, std::string(name(r.id)) + " range");
  }
  int code = -1;
  cli_out({"verify", "--max-n", "40", "--format", "json"}, &code);
  o.require(code == cli::kExitOk, "cli verify exit " + str(code));
  return o;
}

Outcome errata() {
  Outcome o;
  const BigCount t8 = seq(SequenceKind::Tribonacci, 8);
  o.require(t8 == 24, "T_8 = " + t8.get_str());
  const auto row6 = triangle(Family::T, 6).rows[6];
  o.require(row6 == std::vector<BigCount>{13, 10, 1}, "t row 6");
  o.require(row6[0] + row6[1] + row6[2] == t8, "t row 6 sum");

  const auto range = default_range(IdentityId::ColMonoOdd, 8);
  o.require(verify(IdentityId::ColMonoOdd, range).passed(), "corrected index fails");
  VerifyOptions printed;
  printed.mono_odd_form = MonoOddForm::Printed;
  const auto negative = verify(IdentityId::ColMonoOdd, range, printed);
  o.require(!negative.passed(), "printed index unexpectedly passes for n <= 8");
  o.require(negative.counterexample && negative.counterexample->n <= 8, "counterexample outside n <= 8");
  int code = -1;
  cli_out({"verify", "--id", "COL-MONO-ODD", "--max-n", "8", "--printed-index"}, &code);
  o.require(code == cli::kExitVerifyFailed, "cli printed-index exit " + str(code));
  return o;
}

Outcome bijection() {
  Outcome o;
  for (TileModel model : {TileModel::MD, TileModel::MDT}) {
    for (int n = 0; n <= 10; ++n) {
      long count = 0;
      for_each_tiling(n, model, [&](const Tiling& tiling) {
        ++count;
        const BlockWord word = to_block_word(tiling);
        o.require(from_block_word(word, model) == tiling, "decode(encode) differs: " + to_json(tiling));
        o.require(to_block_word(from_block_word(word, model)) == word, "encode(decode) differs: " + word.letters());
      });
      const BigCount expected = model == TileModel::MD ? h(n) : g(n);
      o.require(expected == count, std::string(name(model)) + " count at n=" + str(n) + " is " + str(count));
    }
  }
  return o;
}

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome performance() {
  Outcome o;
  BigCount hv, gv;
  const double th = seconds([&] { hv = h(10000); });
  const double tg = seconds([&] { gv = g(10000); });
  Triangle tri;
  const double tc = seconds([&] { tri = triangle(Family::C, 500); });
  o.require(th < 5.0, "h(10000) took " + std::to_string(th) + " s");
  o.require(tg < 5.0, "g(10000) took " + std::to_string(tg) + " s");
  o.require(tc < 30.0, "triangle(c, 500) took " + std::to_string(tc) + " s");
  o.require(hv == seq(SequenceKind::Tetranacci, 10003), "h(10000) value");
  o.require(gv == seq(SequenceKind::Tribonacci, 10002), "g(10000) value");
  std::size_t entries = 0;
  for (const auto& row : tri.rows) entries += row.size();
  o.require(tri.rows.size() == 501 && entries == 251 * 251, "triangle(c, 500) stores " + str(static_cast<long>(entries)));
  char buf[160];
  std::snprintf(buf, sizeof buf, "h %.3f s, g %.3f s, triangle %.3f s", th, tg, tc);
  if (o.ok) o.detail = buf;
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "dimer triangle rows 0-8", 1.0, dimer_triangle},
      {2, "coloured polynomials n=0..6", 1.0, coloured_polynomials},
      {3, "t, u, v triangles rows 0-8", 1.0, trimer_triangles},
      {4, "enumerator and oracle equal formulas (MD n<=14, MDT n<=16)", 60.0, oracle_equivalence},
      {5, "closed forms and convolutions agree", 30.0, closed_forms},
      {6, "identity catalog passes to n=40", 60.0, identity_suite},
      {7, "errata: T_8 and odd-monomer index", 0.0, errata},
      {8, "block-word bijection round trip n<=10", 0.0, bijection},
      {9, "performance: h, g at 10000; c triangle at 500", 0.0, performance},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Outcome outcome;
    double elapsed = 0;
    try {
      elapsed = seconds([&] { outcome = criterion.body(); });
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (outcome.ok && criterion.limit_seconds > 0 && elapsed >= criterion.limit_seconds) {
      outcome = {false, "took " + std::to_string(elapsed) + " s"};
    }
    if (!outcome.ok) ++failures;

    std::string limit = criterion.limit_seconds > 0 ? ", limit " + std::to_string(static_cast<int>(criterion.limit_seconds)) + " s" : "";
    std::printf("%s  [%d] %s (%.3f s%s)%s%s\n", outcome.ok ? "PASS" : "FAIL", criterion.number, criterion.title,
                elapsed, limit.c_str(), outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
