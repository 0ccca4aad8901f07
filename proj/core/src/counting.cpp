#include <hexstrip/counting.hpp>
#include <hexstrip/errors.hpp>
#include <hexstrip/sequences.hpp>

#include <array>
#include <string>

namespace hexstrip {
namespace {

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw IndexError(std::string(what) + " index " + std::to_string(n) + " is negative");
}

TriangleBuilder& shared_builder(Family family) {
  static std::array<TriangleBuilder, 4> builders = {TriangleBuilder(Family::C), TriangleBuilder(Family::T),
                                                    TriangleBuilder(Family::U), TriangleBuilder(Family::V)};
  return builders[static_cast<std::size_t>(family)];
}

// Coefficients of the (parts)-fold convolution power of `base`, truncated to
// indices 0..target; returns entry `target`.
BigCount convolution_power(const std::vector<BigCount>& base, long parts, long target) {
  if (target < 0 || parts < 1) return 0;
  const auto len = static_cast<std::size_t>(target) + 1;
  std::vector<BigCount> power(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(len));
  std::vector<BigCount> next(len);
  for (long p = 1; p < parts; ++p) {
    for (std::size_t i = 0; i < len; ++i) {
      BigCount sum = 0;
      for (std::size_t j = 0; j <= i; ++j) sum += power[j] * base[i - j];
      next[i] = std::move(sum);
    }
    power.swap(next);
  }
  return power[len - 1];
}

}  // namespace

std::string_view name(Family family) {
  switch (family) {
    case Family::C: return "c";
    case Family::T: return "t";
    case Family::U: return "u";
    case Family::V: return "v";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (Family family : {Family::C, Family::T, Family::U, Family::V}) {
    if (text == name(family)) return family;
  }
  throw UnknownName("unknown triangle family '" + std::string(text) + "'");
}

long support_length(Family family, long n) {
  if (n < 0) return 0;
  switch (family) {
    case Family::C:
    case Family::U: return n / 2 + 1;
    case Family::T: return n / 3 + 1;
    case Family::V: return n + 1;
  }
  return 0;
}

BigCount TriangleBuilder::at(long n, long k) {
  require_nonnegative(n, "triangle row");
  std::lock_guard lock(mutex_);
  extend_locked(n);
  return cell_locked(n, k);
}

std::vector<std::vector<BigCount>> TriangleBuilder::rows(long rows) {
  if (rows < 0) return {};
  std::lock_guard lock(mutex_);
  extend_locked(rows);
  return {rows_.begin(), rows_.begin() + rows + 1};
}

BigCount TriangleBuilder::cell_locked(long n, long k) const {
  if (n < 0 || k < 0) return 0;
  const auto& row = rows_[static_cast<std::size_t>(n)];
  return static_cast<std::size_t>(k) < row.size() ? row[static_cast<std::size_t>(k)] : BigCount(0);
}

void TriangleBuilder::extend_locked(long n) {
  static const std::vector<std::vector<BigCount>> c_seed = {{1}, {1}, {1, 1}, {1, 3}};
  while (static_cast<long>(rows_.size()) <= n) {
    const long r = static_cast<long>(rows_.size());
    const long width = support_length(family_, r);
    std::vector<BigCount> row(static_cast<std::size_t>(width));
    if (family_ == Family::C && r < 4) {
      row = c_seed[static_cast<std::size_t>(r)];
    } else if (r == 0) {
      row = {1};
    } else {
      for (long k = 0; k < width; ++k) {
        auto& cell = row[static_cast<std::size_t>(k)];
        switch (family_) {
          case Family::C:
            cell = cell_locked(r - 1, k) + cell_locked(r - 2, k - 1) + cell_locked(r - 3, k - 1) +
                   cell_locked(r - 4, k - 2);
            break;
          case Family::T:
            cell = cell_locked(r - 1, k) + cell_locked(r - 2, k) + cell_locked(r - 3, k - 1);
            break;
          case Family::U:
            cell = cell_locked(r - 1, k) + cell_locked(r - 2, k - 1) + cell_locked(r - 3, k);
            break;
          case Family::V:
            cell = cell_locked(r - 1, k - 1) + cell_locked(r - 2, k) + cell_locked(r - 3, k);
            break;
        }
      }
    }
    rows_.push_back(std::move(row));
  }
}

BigCount h(long n) {
  require_nonnegative(n, "h");
  // window holds h(i-3), h(i-2), h(i-1), h(i) with h(-3..-1) = 0
  BigCount w0 = 0, w1 = 0, w2 = 0, w3 = 1;
  for (long i = 1; i <= n; ++i) {
    BigCount next = w0 + w1 + w2 + w3;
    w0.swap(w1);
    w1.swap(w2);
    w2.swap(w3);
    w3.swap(next);
  }
  return w3;
}

BigCount g(long n) {
  require_nonnegative(n, "g");
  if (n <= 1) return 1;
  BigCount w0 = 1, w1 = 1, w2 = 2;  // g(i-2), g(i-1), g(i) at i = 2
  for (long i = 3; i <= n; ++i) {
    BigCount next = w0 + w1 + w2;
    w0.swap(w1);
    w1.swap(w2);
    w2.swap(next);
  }
  return w2;
}

BigCount c(long n, long k) {
  require_nonnegative(n, "c");
  return shared_builder(Family::C).at(n, k);
}

BigCount c_closed(long n, long k) {
  if (n < 0 || k < 0 || k > n / 2) {
    throw DomainError("c_closed(" + std::to_string(n) + ", " + std::to_string(k) + ") needs 0 <= k <= n/2");
  }
  BigCount total = 0;
  for (long m = 0; m <= k; ++m) total += binomial(n - k - m, m) * binomial(n - k - m, n - 2 * k);
  return total;
}

BigCount t(long n, long k) { return n < 0 ? BigCount(0) : shared_builder(Family::T).at(n, k); }
BigCount u(long n, long k) { return n < 0 ? BigCount(0) : shared_builder(Family::U).at(n, k); }
BigCount v(long n, long k) { return n < 0 ? BigCount(0) : shared_builder(Family::V).at(n, k); }

BigCount t_conv(long n, long k) {
  if (n < 0 || k < 0) return 0;
  const long target = n - 2 * k + 1;
  if (target < 0) return 0;
  return convolution_power(seq_prefix(SequenceKind::Fibonacci, target + 1), k + 1, target);
}

BigCount u_conv(long n, long k) {
  if (n < 0 || k < 0) return 0;
  const long target = n - 2 * k;
  if (target < 0) return 0;
  return convolution_power(seq_prefix(SequenceKind::Narayana, target + 1), k + 1, target);
}

BigCount v_conv(long n, long k) {
  if (n < 0 || k < 0) return 0;
  const long target = n + 2 * k + 3;
  // positive parts only
  auto base = seq_prefix(SequenceKind::Padovan, target + 1);
  base[0] = 0;
  return convolution_power(base, k + 1, target);
}

BigCount g_kl(long n, long k, long l) {
  if (n < 0 || k < 0 || l < 0 || n - 3 * k - 2 * l < 0) return 0;
  return binomial(n - 3 * k - l, l) * binomial(n - 2 * k - l, k);
}

BivarPoly h_colored(long n) {
  static std::mutex mutex;
  static std::vector<BivarPoly> cache;
  if (n < 0) return {};

  std::lock_guard lock(mutex);
  if (cache.empty()) {
    const BivarPoly a = BivarPoly::a();
    const BivarPoly b = BivarPoly::b();
    cache.push_back(BivarPoly::constant(1));
    cache.push_back(a);
    cache.push_back(BivarPoly::monomial(1, 2, 0) + b);
    cache.push_back(BivarPoly::monomial(1, 3, 0) + BivarPoly::monomial(3, 1, 1));
  }
  while (static_cast<long>(cache.size()) <= n) {
    const std::size_t i = cache.size();
    BivarPoly next = cache[i - 1].shifted(1, 1, 0);
    next += cache[i - 2].shifted(1, 0, 1);
    next += cache[i - 3].shifted(1, 1, 1);
    next += cache[i - 4].shifted(1, 0, 2);
    cache.push_back(std::move(next));
  }
  return cache[static_cast<std::size_t>(n)];
}

BivarPoly h_from_c(long n) {
  BivarPoly result;
  if (n < 0) return result;
  for (long k = 0; k <= n / 2; ++k) result.add_term(c(n, k), static_cast<int>(n - 2 * k), static_cast<int>(k));
  return result;
}

Triangle triangle(Family family, long rows) {
  if (rows < 0) throw DomainError("triangle needs rows >= 0, got " + std::to_string(rows));
  return {std::string(name(family)), shared_builder(family).rows(rows)};
}

Triangle triangle(std::string_view family, long rows) { return triangle(parse_family(family), rows); }

}  // namespace hexstrip
