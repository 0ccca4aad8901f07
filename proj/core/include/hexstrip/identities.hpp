#pragma once

// Catalog of tiling identities, each checked exactly over a parameter range.
// Identities involving colours are compared as polynomials, coefficient by
// coefficient.

#include <hexstrip/big_count.hpp>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hexstrip {

enum class IdentityId {
  TetRowSum,     // TET-ROWSUM   sum_k c(n,k) = Q_{n+3}
  TetDouble,     // TET-DOUBLE   Q_{n+3} = sum_k sum_m C(n-k-m,m) C(n-k-m,n-2k)
  ColSplit,      // COL-SPLIT    h_{m+n} by breakability at m
  ColDimer,      // COL-DIMER    h_n - a^n by position of the first dimer
  ColMonoEven,   // COL-MONO-EVEN h_{2n} - b^n F_{n+1} by first monomer
  ColMonoOdd,    // COL-MONO-ODD  h_{2n-1} by first monomer
  TriDoubleF,    // TRI-DOUBLE-F T_{n+2} = sum_k t_conv(n,k)
  TriDoubleB,    // TRI-DOUBLE-B T_{n+2} = sum_{k,l} g_kl(n,k,l)
  Tri2T,         // TRI-2T       T_n + T_{n-4} = 2 T_{n-1}
  TriSplit,      // TRI-SPLIT    T_{m+n} = T_m T_n + T_{m+1}T_{n+1} + T_{m-1}T_n + T_m T_{n-1}
  TriFib,        // TRI-FIB      T_{n+2} = sum_{k=0}^{n+1} F_k T_{n-k}
  TriNar,        // TRI-NAR      T_{n+2} = sum_{k=0}^{n} N_k T_{n-k} + N_n
  TriPad,        // TRI-PAD      T_{n+2} = sum_{k=1}^{n} P_{k+2} T_{n-k+2} + P_{n+3}
  CDiagFib,      // C-DIAG-FIB   c(2n,n) = F_{n+1}
  CSubdiag,      // C-SUBDIAG    5 c(2n+1,n) = (n+2) F_{n+4} + (n-1) F_{n+2}
};

/// All identities in catalog order.
std::span<const IdentityId> identity_catalog();

std::string_view name(IdentityId id);
/// Parses tokens such as "TRI-2T"; throws UnknownName.
IdentityId parse_identity(std::string_view token);

/// True for identities that take a second parameter m.
bool has_m_parameter(IdentityId id);
/// Smallest n (and m, where applicable) for which the identity is stated.
long minimum_parameter(IdentityId id);

struct Interval {
  long lo = 0;
  long hi = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct ParameterRange {
  Interval n;
  std::optional<Interval> m;  // only for two-parameter identities
  friend bool operator==(const ParameterRange&, const ParameterRange&) = default;
};

/// Default range scaled to max_n: n (and m) from the identity's minimum up to
/// max_n.
ParameterRange default_range(IdentityId id, long max_n);

struct Counterexample {
  long n = 0;
  std::optional<long> m;
  std::string lhs;
  std::string rhs;
};

enum class Status { Pass, Fail };

struct VerificationReport {
  IdentityId id;
  ParameterRange range;
  Status status = Status::Pass;
  std::optional<Counterexample> counterexample;

  bool passed() const { return status == Status::Pass; }
};

/// Which summand index COL-MONO-ODD uses. The printed form h_{n-2k-1} is kept
/// only so its failure can be demonstrated.
enum class MonoOddForm { Corrected, Printed };

struct VerifyOptions {
  MonoOddForm mono_odd_form = MonoOddForm::Corrected;
  /// Replaces c(n,k) in the identities that read the c triangle
  /// (TET-ROWSUM, C-DIAG-FIB, C-SUBDIAG). Used to inject faults.
  std::function<BigCount(long, long)> c_source;
};

/// Checks `id` at every point of `range`. Throws DomainError when the range
/// is empty, violates the identity's hypotheses, or has the wrong arity.
VerificationReport verify(IdentityId id, const ParameterRange& range, const VerifyOptions& options = {});

/// Runs the whole catalog with default_range(id, max_n). Throws DomainError
/// for max_n < 8. Reports come back in catalog order.
std::vector<VerificationReport> verify_all(long max_n, const VerifyOptions& options = {});

bool all_passed(std::span<const VerificationReport> reports);

/// {"id":"TRI-2T","range":{"n":[4,40]},"status":"pass"} plus
/// "counterexample":{"n":..,"m":..,"lhs":"..","rhs":".."} on failure.
std::string to_json(const VerificationReport& report);

}  // namespace hexstrip
