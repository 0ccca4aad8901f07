#pragma once

#include <hexstrip/big_count.hpp>

#include <string_view>
#include <vector>

namespace hexstrip {

/// The base integer sequences, each with a fixed offset:
///   Fibonacci   F_0=0, F_1=1
///   Tribonacci  T_0=T_1=0, T_2=1   (also T_{-1}=1)
///   Tetranacci  Q_0=Q_1=Q_2=0, Q_3=1
///   Narayana    N_0=N_1=N_2=1, N_n=N_{n-1}+N_{n-3}
///   Padovan     P_0=1, P_1=P_2=0, P_n=P_{n-2}+P_{n-3}
enum class SequenceKind { Fibonacci, Tribonacci, Tetranacci, Narayana, Padovan };

std::string_view name(SequenceKind kind);

/// n-th term of `kind`. Throws IndexError for n < 0, except that
/// Tribonacci accepts n = -1.
BigCount seq(SequenceKind kind, long n);

/// Terms 0..count-1 of `kind`.
std::vector<BigCount> seq_prefix(SequenceKind kind, long count);

}  // namespace hexstrip
