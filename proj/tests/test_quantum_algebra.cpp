#include <doctest.h>

#include <cmath>
#include <functional>

#include "support.hpp"

using namespace qdilog;
using namespace qdilog::testing;

namespace {

using Names = std::vector<std::vector<std::string>>;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

void require_property(const PropertyResult& r) {
  INFO(r.name << ": " << r.first_failure);
  CHECK(r.cases >= 100);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("algebra basics") {
  const Quiver q = a2();
  const auto a = make_algebra(q, DimVector{2, 2}, 20);
  CHECK(a->size() == 9);
  CHECK(a->within(DimVector{2, 1}));
  CHECK_FALSE(a->within(DimVector{3, 0}));
  CHECK(a->key(a->index(DimVector{1, 2})) == DimVector{1, 2});

  const auto one = identity(a);
  const auto x = symbol(a, DimVector{1, 1});
  CHECK(one * x == x);
  CHECK(x * one == x);
  CHECK(qt_multiply(one, one) == one);

  CHECK(symbol(a, q.unit(0)) * symbol(a, q.unit(1)) ==
        monomial(a, DimVector{1, 1}, VSeries::one(20)));
  CHECK(x == monomial(a, DimVector{1, 1}, VSeries::monomial(-1, 1, 20)));
  CHECK(to_string(x) == "(-1·q^{1/2}) · y^(1,1)");
}

TEST_CASE("single-vertex dilogarithm") {
  const Quiver q = make_quiver({"1"}, {});
  const auto a = make_algebra(q, DimVector{2}, 20);
  const auto e = dilog(a, DimVector{1});
  CHECK(e.coefficient(DimVector{0}) == VSeries::one(20));
  CHECK(e.coefficient(DimVector{1}) == -poincare_P(1, 20).shifted(1));
  CHECK(e.coefficient(DimVector{2}) == poincare_P(2, 20).shifted(4));
  CHECK(symbol(a, DimVector{2}) == monomial(a, DimVector{2}, VSeries::monomial(-1, 0, 20)));
  CHECK(trivial_dt(a) == e);

  const auto e2 = dilog(a, DimVector{2});
  CHECK(e2.coefficient(DimVector{1}).is_zero());
  CHECK(e2.coefficient(DimVector{2}) == poincare_P(1, 20).shifted(1));
}

TEST_CASE("pentagon identity and negative control") {
  const Quiver q = a2();
  const int vm = 40;
  const auto a = make_algebra(q, DimVector{3, 3}, vm);
  const DimVector e1{1, 0}, e2{0, 1}, e12{1, 1};
  const auto lhs = dilog(a, e1) * dilog(a, e2);
  CHECK(lhs == trivial_dt(a));
  CHECK(lhs == ordered_dilog_product(a, {e2, e12, e1}));
  CHECK_FALSE(lhs == ordered_dilog_product(a, {e1, e12, e2}));
  CHECK_FALSE(lhs == ordered_dilog_product(a, {e2, e1}));

  const auto p = make_partition(q, Names{{"1", "2"}});
  CHECK(factorization_product(a, p, admissible_total_order(q, p)) == lhs);

  RootOrder bad;
  bad.entries = {{e1, 0}, {e12, 0}, {e2, 0}};
  CHECK(kind_of([&] { factorization_product(a, p, bad); }) == ErrorKind::InvalidOrder);
  CHECK(trivial_dt(a).coefficient(DimVector{2, 2}) ==
        (poincare_P(2, vm) * poincare_P(2, vm)).shifted(8));
}

TEST_CASE("errors") {
  const auto a = make_algebra(a2(), DimVector{1, 1}, 20);
  const auto b = make_algebra(a2(), DimVector{1, 1}, 22);
  CHECK(kind_of([&] { monomial(a, DimVector{2, 0}, VSeries::one(20)); }) ==
        ErrorKind::BoundExceeded);
  CHECK(kind_of([&] { symbol(a, DimVector{0, 2}); }) == ErrorKind::BoundExceeded);
  CHECK(kind_of([&] { dilog(a, DimVector{0, 0}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { (void)(identity(a) * identity(b)); }) == ErrorKind::TruncationMismatch);
  CHECK(kind_of([&] { trivial_dt(make_algebra(make_quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}}),
                                              DimVector{1, 1}, 20)); }) == ErrorKind::CyclicQuiver);
  const Quiver t = a2_tilde();
  CHECK(kind_of([&] { verify_factorization(t, make_partition(t, Names{{"1", "3"}, {"2"}}),
                                           DimVector{1, 1, 1}); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("algebraic properties") {
  require_property(associativity_property(100, 1));
  require_property(commutation_property(100, 2));
  require_property(power_property(100, 3));
  require_property(closed_form_property(100, 4));
}

TEST_CASE("swapping lambda-orthogonal neighbours leaves the product unchanged") {
  Gen g(9);
  int swaps = 0;
  for (int c = 0; c < 100; ++c) {
    const auto s = random_stratum_case(g, 2);
    auto order = admissible_total_order(s.quiver, s.partition);
    if (order.entries.size() < 2) continue;
    const std::size_t i = g.index(order.entries.size() - 1);
    if (lambda(s.quiver, order.entries[i].root, order.entries[i + 1].root) != 0) continue;
    const auto a = make_algebra(s.quiver, uniform_vector(s.quiver.num_vertices(), 2), 16);
    const auto before = ordered_dilog_product(a, order.roots());
    std::swap(order.entries[i], order.entries[i + 1]);
    CHECK(ordered_dilog_product(a, order.roots()) == before);
    ++swaps;
  }
  CHECK(swaps > 0);
}

TEST_CASE("factorization over every admissible partition") {
  for (const auto& nq : test_matrix()) {
    for (const auto& p : enumerate_partitions(nq.quiver, true)) {
      const auto report =
          verify_factorization(nq.quiver, p, uniform_vector(nq.quiver.num_vertices(), 2), 40);
      INFO(nq.name << " " << report.partition);
      CHECK(report.passed());
      CHECK(report.checked == static_cast<std::size_t>(std::pow(3, nq.quiver.num_vertices())));
    }
  }
  const Quiver k = kronecker();
  const auto report = verify_factorization(k, make_partition(k, Names{{"1"}, {"2"}}),
                                           DimVector{4, 4}, 40);
  CHECK(report.passed());
}
