#include <hexstrip/errors.hpp>
#include <hexstrip/sequences.hpp>

#include <array>
#include <cstddef>
#include <mutex>
#include <string>

namespace hexstrip {
namespace {

struct Recurrence {
  std::vector<BigCount> initial;
  // term n = sum of term (n - lag) over lags
  std::vector<std::size_t> lags;
};

const Recurrence& recurrence(SequenceKind kind) {
  static const std::array<Recurrence, 5> table = {{
      {{0, 1}, {1, 2}},              // Fibonacci
      {{0, 0, 1}, {1, 2, 3}},        // Tribonacci
      {{0, 0, 0, 1}, {1, 2, 3, 4}},  // Tetranacci
      {{1, 1, 1}, {1, 3}},           // Narayana
      {{1, 0, 0}, {2, 3}},           // Padovan
  }};
  return table[static_cast<std::size_t>(kind)];
}

// Terms are appended bottom-up and never modified, so a caller only ever
// observes fully computed values.
class Memo {
 public:
  explicit Memo(SequenceKind kind) : rule_(recurrence(kind)), terms_(rule_.initial) {}

  BigCount at(std::size_t n) {
    std::lock_guard lock(mutex_);
    extend(n + 1);
    return terms_[n];
  }

  std::vector<BigCount> prefix(std::size_t count) {
    std::lock_guard lock(mutex_);
    extend(count);
    return {terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(count)};
  }

 private:
  void extend(std::size_t count) {
    terms_.reserve(count);
    while (terms_.size() < count) {
      const std::size_t n = terms_.size();
      BigCount next = 0;
      for (std::size_t lag : rule_.lags) next += terms_[n - lag];
      terms_.push_back(std::move(next));
    }
  }

  const Recurrence& rule_;
  std::mutex mutex_;
  std::vector<BigCount> terms_;
};

Memo& memo(SequenceKind kind) {
  static std::array<Memo, 5> memos = {Memo(SequenceKind::Fibonacci), Memo(SequenceKind::Tribonacci),
                                      Memo(SequenceKind::Tetranacci), Memo(SequenceKind::Narayana),
                                      Memo(SequenceKind::Padovan)};
  return memos[static_cast<std::size_t>(kind)];
}

}  // namespace

std::string_view name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Fibonacci: return "Fibonacci";
    case SequenceKind::Tribonacci: return "Tribonacci";
    case SequenceKind::Tetranacci: return "Tetranacci";
    case SequenceKind::Narayana: return "Narayana";
    case SequenceKind::Padovan: return "Padovan";
  }
  return "?";
}

BigCount seq(SequenceKind kind, long n) {
  // T_{-1} = T_2 - T_1 - T_0
  if (kind == SequenceKind::Tribonacci && n == -1) return 1;
  if (n < 0) {
    throw IndexError(std::string(name(kind)) + " index " + std::to_string(n) + " is out of domain");
  }
  return memo(kind).at(static_cast<std::size_t>(n));
}

std::vector<BigCount> seq_prefix(SequenceKind kind, long count) {
  if (count < 0) throw IndexError("negative prefix length " + std::to_string(count));
  return memo(kind).prefix(static_cast<std::size_t>(count));
}

BigCount binomial(long p, long q) {
  if (p < 0 || q < 0 || q > p) return 0;
  BigCount result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
  return result;
}

}  // namespace hexstrip
