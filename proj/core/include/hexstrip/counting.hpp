#pragma once

// Exact counts of strip tilings from recurrences, closed forms and
// convolution formulas.
//
// Notation: c(n,k) counts MD tilings with k dimers; t, u, v count MDT tilings
// with k trimers, dimers and monomers respectively. Every two-index family is
// zero outside its support, so recurrences may reference any cell.

#include <hexstrip/big_count.hpp>
#include <hexstrip/bivar_poly.hpp>
#include <hexstrip/triangle.hpp>

#include <functional>
#include <mutex>
#include <string_view>
#include <vector>

namespace hexstrip {

/// Number of MD tilings; h(0)=1, h(n)=h(n-1)+h(n-2)+h(n-3)+h(n-4).
BigCount h(long n);

/// Number of MDT tilings; g(0)=g(1)=1, g(2)=2, g(n)=g(n-1)+g(n-2)+g(n-3).
BigCount g(long n);

/// MD tilings of length n with exactly k dimers (recurrence).
BigCount c(long n, long k);

/// Sum over m of C(n-k-m, m) * C(n-k-m, n-2k). Throws DomainError unless
/// 0 <= k <= n/2.
BigCount c_closed(long n, long k);

/// MDT tilings with exactly k trimers / dimers / monomers (recurrences).
BigCount t(long n, long k);
BigCount u(long n, long k);
BigCount v(long n, long k);

/// The same three families from (k+1)-fold convolution powers of the
/// Fibonacci, Narayana and (positive-index) Padovan sequences.
BigCount t_conv(long n, long k);
BigCount u_conv(long n, long k);
BigCount v_conv(long n, long k);

/// MDT tilings with k trimers, l dimers and n-3k-2l monomers:
/// C(n-3k-l, l) * C(n-2k-l, k), or 0 when n-3k-2l < 0.
BigCount g_kl(long n, long k, long l);

/// Colour-weighted MD count from the four-term recurrence
/// h^{a,b}_n = a h_{n-1} + b h_{n-2} + ab h_{n-3} + b^2 h_{n-4};
/// the zero polynomial for n < 0.
BivarPoly h_colored(long n);

/// Sum over k of c(n,k) a^(n-2k) b^k.
BivarPoly h_from_c(long n);

enum class Family { C, T, U, V };

std::string_view name(Family family);
/// "c", "t", "u" or "v"; throws UnknownName otherwise.
Family parse_family(std::string_view text);

/// Number of stored entries in row n: c, u -> n/2+1; t -> n/3+1; v -> n+1.
long support_length(Family family, long n);

/// Rows 0..rows of the named triangle, each trimmed to its support.
Triangle triangle(Family family, long rows);
Triangle triangle(std::string_view family, long rows);

/// Incrementally built triangle for one family. Row n is produced from the
/// family's recurrence using only rows below it. Thread-safe; the shared
/// instances behind c/t/u/v are of this type, and a fresh instance always
/// reproduces them exactly.
class TriangleBuilder {
 public:
  explicit TriangleBuilder(Family family) : family_(family) {}

  Family family() const { return family_; }
  /// Entry (n, k); zero outside the support. n must be >= 0.
  BigCount at(long n, long k);
  /// Copy of rows 0..rows.
  std::vector<std::vector<BigCount>> rows(long rows);

 private:
  void extend_locked(long n);
  BigCount cell_locked(long n, long k) const;

  Family family_;
  std::mutex mutex_;
  std::vector<std::vector<BigCount>> rows_;
};

}  // namespace hexstrip
