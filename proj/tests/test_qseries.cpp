#include <doctest.h>

#include "support.hpp"

using namespace qdilog;
using namespace qdilog::testing;

namespace {

/// Partitions of n into parts no larger than k, by direct enumeration.
long enumerate_partitions_of(int n, int k) {
  if (n == 0) return 1;
  long total = 0;
  for (int part = std::min(n, k); part >= 1; --part) total += enumerate_partitions_of(n - part, part);
  return total;
}

VSeries one_minus_q_power(int j, int v_max) {
  return VSeries::one(v_max) - VSeries::q_power(j, v_max);
}

}  // namespace

TEST_CASE("Poincare series") {
  const int vm = 60;
  CHECK(poincare_P(0, vm) == VSeries::one(vm));
  CHECK(one_minus_q_power(1, vm) * poincare_P(1, vm) == VSeries::one(vm));
  for (int k = 1; k <= 6; ++k) {
    VSeries check = poincare_P(k, vm);
    for (int j = 1; j <= k; ++j) check *= one_minus_q_power(j, vm);
    CHECK(check == VSeries::one(vm));
  }
  for (int k = 0; k <= 6; ++k) {
    const VSeries p = poincare_P(k, vm);
    for (int n = 0; n <= 30; ++n) {
      CHECK(p.coeff(2 * n) == partition_count(n, k));
      CHECK(p.coeff(2 * n + 1) == 0);
      CHECK(partition_count(n, k) == enumerate_partitions_of(n, k));
    }
  }
  CHECK(partition_count(4, 2) == 3);
  CHECK(partition_count(0, 0) == 1);
  CHECK(partition_count(3, 0) == 0);
}

TEST_CASE("series arithmetic") {
  Gen g(21);
  const int vm = 24;
  for (int c = 0; c < 100; ++c) {
    const VSeries a = g.series(vm), b = g.series(vm), d = g.series(vm);
    CHECK(a * b == b * a);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a - a == VSeries(vm));
    const int s = g.uniform(0, 5);
    CHECK(a.shifted(s) == a * VSeries::v_power(s, vm));
  }

  const VSeries x = VSeries::from_coefficients(0, {1, 2, 0, 3}, 2);
  CHECK(x.max_exp() == 1);
  CHECK(x.coeff(1) == 2);
  CHECK(VSeries::from_coefficients(2, {0, 0}, 10).is_zero());

  const VSeries u = VSeries::from_coefficients(0, {1, -1}, vm);
  CHECK(u * u.inverse() == VSeries::one(vm));
  CHECK(to_string(VSeries::from_coefficients(1, {2, 0, -1}, 8)) == "2·q^{1/2} + -1·q^{3/2}");
}

TEST_CASE("series errors") {
  const VSeries a = VSeries::one(10), b = VSeries::one(12);
  try {
    (void)(a + b);
    FAIL("expected TruncationMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TruncationMismatch);
  }
  CHECK_THROWS_AS((void)(a * b), Error);
  try {
    (void)VSeries::from_coefficients(0, {2, 1}, 10).inverse();
    FAIL("expected NonUnit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnit);
  }
  CHECK_THROWS_AS((void)VSeries::v_power(1, 10).inverse(), Error);
}
