#include <hexstrip/counting.hpp>
#include <hexstrip/errors.hpp>
#include <hexstrip/identities.hpp>
#include <hexstrip/sequences.hpp>

#include <nlohmann/json.hpp>

#include <array>
#include <string>

namespace hexstrip {
namespace {

struct CatalogEntry {
  IdentityId id;
  std::string_view token;
  bool two_parameter;
  long minimum;
};

constexpr std::array<CatalogEntry, 15> kCatalog = {{
    {IdentityId::TetRowSum, "TET-ROWSUM", false, 0},
    {IdentityId::TetDouble, "TET-DOUBLE", false, 0},
    {IdentityId::ColSplit, "COL-SPLIT", true, 0},
    {IdentityId::ColDimer, "COL-DIMER", false, 1},
    {IdentityId::ColMonoEven, "COL-MONO-EVEN", false, 0},
    {IdentityId::ColMonoOdd, "COL-MONO-ODD", false, 1},
    {IdentityId::TriDoubleF, "TRI-DOUBLE-F", false, 0},
    {IdentityId::TriDoubleB, "TRI-DOUBLE-B", false, 0},
    {IdentityId::Tri2T, "TRI-2T", false, 4},
    {IdentityId::TriSplit, "TRI-SPLIT", true, 1},
    {IdentityId::TriFib, "TRI-FIB", false, 0},
    {IdentityId::TriNar, "TRI-NAR", false, 0},
    {IdentityId::TriPad, "TRI-PAD", false, 0},
    {IdentityId::CDiagFib, "C-DIAG-FIB", false, 0},
    {IdentityId::CSubdiag, "C-SUBDIAG", false, 0},
}};

constexpr std::array<IdentityId, 15> kOrder = [] {
  std::array<IdentityId, 15> ids{};
  for (std::size_t i = 0; i < kCatalog.size(); ++i) ids[i] = kCatalog[i].id;
  return ids;
}();

const CatalogEntry& entry(IdentityId id) { return kCatalog[static_cast<std::size_t>(id)]; }

BigCount F(long n) { return seq(SequenceKind::Fibonacci, n); }
BigCount T(long n) { return seq(SequenceKind::Tribonacci, n); }
BigCount Q(long n) { return seq(SequenceKind::Tetranacci, n); }
BigCount N(long n) { return seq(SequenceKind::Narayana, n); }
BigCount P(long n) { return seq(SequenceKind::Padovan, n); }

// Colour-weighted count with h_j = 0 for j < 0.
BivarPoly H(long n) { return h_colored(n); }

std::string render(const BigCount& x) { return x.get_str(10); }
std::string render(const BivarPoly& x) { return x.to_string(); }

std::optional<Counterexample> compare(const BigCount& lhs, const BigCount& rhs, long n, std::optional<long> m) {
  if (lhs == rhs) return std::nullopt;
  return Counterexample{n, m, render(lhs), render(rhs)};
}

std::optional<Counterexample> compare(const BivarPoly& lhs, const BivarPoly& rhs, long n, std::optional<long> m) {
  if (lhs == rhs) return std::nullopt;
  return Counterexample{n, m, render(lhs), render(rhs)};
}

class Checker {
 public:
  explicit Checker(const VerifyOptions& options) : options_(options) {}

  std::optional<Counterexample> check(IdentityId id, long n, std::optional<long> m) const {
    switch (id) {
      case IdentityId::TetRowSum: {
        BigCount sum = 0;
        for (long k = 0; k <= n / 2; ++k) sum += c_at(n, k);
        return compare(sum, Q(n + 3), n, m);
      }
      case IdentityId::TetDouble: {
        BigCount sum = 0;
        for (long k = 0; k <= n / 2; ++k) {
          for (long j = 0; j <= k; ++j) sum += binomial(n - k - j, j) * binomial(n - k - j, n - 2 * k);
        }
        return compare(Q(n + 3), sum, n, m);
      }
      case IdentityId::ColSplit: return col_split(*m, n);
      case IdentityId::ColDimer: {
        BivarPoly lhs = H(n) - BivarPoly::monomial(1, static_cast<int>(n), 0);
        BivarPoly rhs = H(n - 2).shifted(1, 0, 1);
        for (long k = 3; k <= n; ++k) {
          rhs += H(n - k).shifted(2, static_cast<int>(k - 2), 1);
          rhs += H(n - k - 1).shifted(1, static_cast<int>(k - 3), 2);
        }
        return compare(lhs, rhs, n, m);
      }
      case IdentityId::ColMonoEven: {
        BivarPoly lhs = H(2 * n) - BivarPoly::monomial(F(n + 1), 0, static_cast<int>(n));
        BivarPoly rhs;
        for (long k = 0; k <= n; ++k) rhs += H(2 * n - 2 * k - 1).shifted(F(k + 2), 1, static_cast<int>(k));
        return compare(lhs, rhs, n, m);
      }
      case IdentityId::ColMonoOdd: {
        const bool printed = options_.mono_odd_form == MonoOddForm::Printed;
        BivarPoly rhs;
        for (long k = 0; k <= n; ++k) {
          const long index = printed ? n - 2 * k - 1 : 2 * n - 2 * k - 2;
          rhs += H(index).shifted(F(k + 2), 1, static_cast<int>(k));
        }
        return compare(H(2 * n - 1), rhs, n, m);
      }
      case IdentityId::TriDoubleF: {
        BigCount sum = 0;
        for (long k = 0; k <= n; ++k) sum += t_conv(n, k);
        return compare(T(n + 2), sum, n, m);
      }
      case IdentityId::TriDoubleB: {
        BigCount sum = 0;
        for (long k = 0; k <= n / 3; ++k) {
          for (long l = 0; l <= (n - 3 * k) / 2; ++l) sum += g_kl(n, k, l);
        }
        return compare(T(n + 2), sum, n, m);
      }
      case IdentityId::Tri2T: return compare(T(n) + T(n - 4), 2 * T(n - 1), n, m);
      case IdentityId::TriSplit: {
        const long mm = *m;
        BigCount rhs = T(mm) * T(n) + T(mm + 1) * T(n + 1) + T(mm - 1) * T(n) + T(mm) * T(n - 1);
        return compare(T(mm + n), rhs, n, m);
      }
      case IdentityId::TriFib: {
        BigCount sum = 0;
        for (long k = 0; k <= n + 1; ++k) sum += F(k) * T(n - k);
        return compare(T(n + 2), sum, n, m);
      }
      case IdentityId::TriNar: {
        BigCount sum = N(n);
        for (long k = 0; k <= n; ++k) sum += N(k) * T(n - k);
        return compare(T(n + 2), sum, n, m);
      }
      case IdentityId::TriPad: {
        BigCount sum = P(n + 3);
        for (long k = 1; k <= n; ++k) sum += P(k + 2) * T(n - k + 2);
        return compare(T(n + 2), sum, n, m);
      }
      case IdentityId::CDiagFib: return compare(c_at(2 * n, n), F(n + 1), n, m);
      case IdentityId::CSubdiag: {
        BigCount rhs = BigCount(n + 2) * F(n + 4) + BigCount(n - 1) * F(n + 2);
        return compare(BigCount(5 * c_at(2 * n + 1, n)), rhs, n, m);
      }
    }
    return std::nullopt;
  }

 private:
  BigCount c_at(long n, long k) const { return options_.c_source ? options_.c_source(n, k) : c(n, k); }

  // Tilings of m+n split by how (or whether) they cross the m|m+1 boundary.
  static std::optional<Counterexample> col_split(long m, long n) {
    BivarPoly rhs = H(m) * H(n);
    BivarPoly left1 = H(n - 1).shifted(1, 0, 1);
    left1 += H(n - 2).shifted(1, 1, 1);
    left1 += H(n - 3).shifted(1, 0, 2);
    rhs += H(m - 1) * left1;
    BivarPoly left2 = H(n - 1).shifted(1, 1, 1);
    left2 += H(n - 2).shifted(1, 0, 2);
    rhs += H(m - 2) * left2;
    rhs += (H(n - 1) * H(m - 3)).shifted(1, 0, 2);
    return compare(H(m + n), rhs, n, m);
  }

  const VerifyOptions& options_;
};

void check_interval(const Interval& interval, long minimum, const char* parameter, IdentityId id) {
  if (interval.lo > interval.hi) {
    throw DomainError(std::string(name(id)) + ": empty range for " + parameter);
  }
  if (interval.lo < minimum) {
    throw DomainError(std::string(name(id)) + " requires " + parameter + " >= " + std::to_string(minimum));
  }
}

}  // namespace

std::span<const IdentityId> identity_catalog() { return kOrder; }

std::string_view name(IdentityId id) { return entry(id).token; }

IdentityId parse_identity(std::string_view token) {
  for (const auto& e : kCatalog) {
    if (e.token == token) return e.id;
  }
  throw UnknownName("unknown identity '" + std::string(token) + "'");
}

bool has_m_parameter(IdentityId id) { return entry(id).two_parameter; }

long minimum_parameter(IdentityId id) { return entry(id).minimum; }

ParameterRange default_range(IdentityId id, long max_n) {
  const long lo = minimum_parameter(id);
  ParameterRange range{{lo, max_n}, std::nullopt};
  if (has_m_parameter(id)) range.m = Interval{lo, max_n};
  return range;
}

VerificationReport verify(IdentityId id, const ParameterRange& range, const VerifyOptions& options) {
  const long minimum = minimum_parameter(id);
  check_interval(range.n, minimum, "n", id);
  if (has_m_parameter(id) != range.m.has_value()) {
    throw DomainError(std::string(name(id)) + (has_m_parameter(id) ? " needs an m range" : " takes no m range"));
  }
  if (range.m) check_interval(*range.m, minimum, "m", id);

  VerificationReport report{id, range, Status::Pass, std::nullopt};
  const Checker checker(options);
  const Interval m_range = range.m.value_or(Interval{0, 0});
  for (long m = m_range.lo; m <= m_range.hi; ++m) {
    for (long n = range.n.lo; n <= range.n.hi; ++n) {
      auto failure = checker.check(id, n, range.m ? std::optional<long>(m) : std::nullopt);
      if (failure) {
        report.status = Status::Fail;
        report.counterexample = std::move(failure);
        return report;
      }
    }
  }
  return report;
}

std::vector<VerificationReport> verify_all(long max_n, const VerifyOptions& options) {
  if (max_n < 8) throw DomainError("verify_all needs max_n >= 8, got " + std::to_string(max_n));
  std::vector<VerificationReport> reports;
  for (IdentityId id : identity_catalog()) reports.push_back(verify(id, default_range(id, max_n), options));
  return reports;
}

bool all_passed(std::span<const VerificationReport> reports) {
  for (const auto& report : reports) {
    if (!report.passed()) return false;
  }
  return true;
}

std::string to_json(const VerificationReport& report) {
  nlohmann::ordered_json range;
  range["n"] = {report.range.n.lo, report.range.n.hi};
  if (report.range.m) range["m"] = {report.range.m->lo, report.range.m->hi};

  nlohmann::ordered_json doc;
  doc["id"] = name(report.id);
  doc["range"] = std::move(range);
  doc["status"] = report.passed() ? "pass" : "fail";
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    nlohmann::ordered_json cx;
    cx["n"] = ce.n;
    if (ce.m) cx["m"] = *ce.m;
    cx["lhs"] = ce.lhs;
    cx["rhs"] = ce.rhs;
    doc["counterexample"] = std::move(cx);
  }
  return doc.dump();
}

}  // namespace hexstrip
