#pragma once

#include <gmpxx.h>

#include "qdilog/vseries.hpp"

namespace qdilog {

using Integer = mpz_class;
using VSeries = BasicVSeries<Integer>;

/// Default truncation: q-order 20.
inline constexpr int kDefaultVMax = 40;

/// P_k = prod_{j=1..k} (1 - q^j)^{-1}; P_0 = 1.
VSeries poincare_P(int k, int v_max);

/// Number of partitions of n into parts from {1, ..., k}.
Integer partition_count(int n, int k);

}  // namespace qdilog
