#pragma once

#include <gmpxx.h>

#include <string>

namespace hexstrip {

/// Exact arbitrary-precision integer used for every count.
using BigCount = mpz_class;

inline std::string to_string(const BigCount& value) { return value.get_str(10); }

/// Binomial coefficient with zero extension: 0 when p < 0, q < 0 or q > p.
BigCount binomial(long p, long q);

}  // namespace hexstrip
