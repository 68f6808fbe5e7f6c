#include <doctest.h>

#include <functional>

#include "support.hpp"

using namespace qdilog;
using namespace qdilog::testing;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("quiver construction validates vertices and arrows") {
  const Quiver q = a3();
  CHECK(q.num_vertices() == 3);
  CHECK(q.num_arrows() == 2);
  CHECK(q.vertex_index("2") == 1);
  CHECK(q.arrow_matrix()(1, 0) == 1);

  const Quiver single = make_quiver({"1"}, {});
  CHECK(single.num_vertices() == 1);
  CHECK(single.num_arrows() == 0);

  CHECK(kind_of([] { make_quiver({"1"}, {{"a", "1", "1"}}); }) == ErrorKind::LoopArrow);
  CHECK(kind_of([] { make_quiver({"1", "1"}, {}); }) == ErrorKind::DuplicateVertex);
  CHECK(kind_of([] { make_quiver({"1"}, {{"a", "1", "2"}}); }) == ErrorKind::DanglingArrow);
  CHECK(kind_of([] { make_quiver({"1", "2"}, {{"a", "1", "2"}, {"a", "2", "1"}}); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([&] { q.vertex_index("9"); }) == ErrorKind::UnknownVertex);
}

TEST_CASE("dimension vectors") {
  const DimVector a{1, 2, 0};
  const DimVector b{0, 1, 3};
  CHECK(a + b == DimVector{1, 3, 3});
  CHECK(b - DimVector{0, 1, 1} == DimVector{0, 0, 2});
  CHECK(2 * a == DimVector{2, 4, 0});
  CHECK(a.height() == 3);
  CHECK(a.squared_norm() == 5);
  CHECK(DimVector{0, 1, 0}.leq(b));
  CHECK_FALSE(a.leq(b));
  CHECK(to_string(a) == "(1,2,0)");
  CHECK(kind_of([&] { (void)a.leq(DimVector{1, 2}); }) == ErrorKind::KeyMismatch);
}

TEST_CASE("head-before-tail order") {
  CHECK(topological_vertex_order(a3()).sequence == std::vector<std::size_t>{0, 1, 2});
  CHECK(topological_vertex_order(make_quiver({"1"}, {})).sequence == std::vector<std::size_t>{0});
  CHECK(topological_vertex_order(a2_reversed()).sequence == std::vector<std::size_t>{1, 0});

  const Quiver two_cycle = make_quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
  CHECK_FALSE(is_acyclic(two_cycle));
  try {
    topological_vertex_order(two_cycle);
    FAIL("expected a cycle");
  } catch (const CyclicQuiverError& e) {
    CHECK(e.kind() == ErrorKind::CyclicQuiver);
    CHECK(e.witness() == std::vector<std::string>{"1", "2", "1"});
  }

  for (const auto& nq : test_matrix()) {
    const auto order = topological_vertex_order(nq.quiver).sequence;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        CHECK(lambda(nq.quiver, nq.quiver.unit(order[i]), nq.quiver.unit(order[j])) <= 0);
      }
    }
  }
}

TEST_CASE("Euler form and lambda") {
  CHECK(euler_form(a2(), DimVector{1, 1}, DimVector{1, 1}) == 1);
  CHECK(euler_form(kronecker(), DimVector{1, 1}, DimVector{1, 1}) == 0);
  CHECK(euler_form(a3(), DimVector{0, 0, 0}, DimVector{1, 2, 3}) == 0);

  const Quiver q2 = a2();
  CHECK(lambda(q2, q2.unit(1), q2.unit(0)) == 1);
  CHECK(lambda(q2, q2.unit(0), q2.unit(1)) == -1);
  const Quiver q3 = a3();
  CHECK(lambda(q3, q3.unit(0), q3.unit(2)) == 0);

  const std::vector<std::size_t> b_only{1};
  CHECK(lambda_restricted(q3, b_only, q3.unit(2), q3.unit(1)) == 1);
  CHECK(lambda_restricted(q3, b_only, q3.unit(1), q3.unit(0)) == 0);
  CHECK(lambda_restricted(q3, std::vector<std::string>{"b"}, q3.unit(2), q3.unit(1)) == 1);
  CHECK(lambda_restricted(q3, std::vector<std::size_t>{}, q3.unit(2), q3.unit(1)) == 0);
}

TEST_CASE("form identities on random vectors") {
  Gen g(11);
  const auto matrix = test_matrix();
  for (int c = 0; c < 200; ++c) {
    const auto& nq = g.pick(matrix);
    const auto& q = nq.quiver;
    const auto box = uniform_vector(q.num_vertices(), 4);
    const DimVector x = g.below(box), x2 = g.below(box), y = g.below(box);
    CHECK(euler_form(q, x + x2, y) == euler_form(q, x, y) + euler_form(q, x2, y));
    CHECK(lambda(q, x, y) == -lambda(q, y, x));
    CHECK(lambda(q, x, x) == 0);
    CHECK(lambda(q, x, y) == euler_form(q, y, x) - euler_form(q, x, y));

    std::vector<std::size_t> all(q.num_arrows()), left, right;
    std::iota(all.begin(), all.end(), 0);
    for (auto k : all) (g.coin() ? left : right).push_back(k);
    CHECK(lambda_restricted(q, all, x, y) == lambda(q, x, y));
    CHECK(lambda_restricted(q, left, x, y) + lambda_restricted(q, right, x, y) == lambda(q, x, y));
  }
}

TEST_CASE("subquivers and contractions") {
  const Quiver q = a3();
  const Quiver sub = induced_subquiver(q, std::vector<std::string>{"2", "3"});
  CHECK(sub.vertices() == std::vector<std::string>{"2", "3"});
  REQUIRE(sub.num_arrows() == 1);
  CHECK(sub.arrows()[0].id == "b");
  CHECK(induced_subquiver(q, std::vector<std::size_t>{}).num_vertices() == 0);
  CHECK(induced_subquiver(kronecker(), std::vector<std::size_t>{0, 1}).num_arrows() == 2);

  const Quiver c = contraction(q, index_blocks({{0}, {1, 2}}));
  CHECK(c.vertices() == std::vector<std::string>{"{1}", "{2,3}"});
  REQUIRE(c.num_arrows() == 1);
  CHECK(c.arrows()[0].tail == 1);
  CHECK(c.arrows()[0].head == 0);

  const Quiver t = contraction(a2_tilde(), index_blocks({{0, 2}, {1}}));
  CHECK(t.num_arrows() == 2);
  CHECK_FALSE(is_acyclic(t));

  for (const auto& nq : test_matrix()) {
    std::vector<std::vector<std::size_t>> singles;
    for (std::size_t i = 0; i < nq.quiver.num_vertices(); ++i) singles.push_back({i});
    CHECK(isomorphic(contraction(nq.quiver, singles), nq.quiver));
  }

  CHECK(kind_of([&] { contraction(q, index_blocks({{0}, {1}})); }) == ErrorKind::NotAPartition);
  CHECK(kind_of([&] { contraction(q, index_blocks({{0, 1}, {1, 2}})); }) ==
        ErrorKind::NotAPartition);
}

TEST_CASE("connectivity and restriction") {
  CHECK(is_connected(a3()));
  const Quiver split = make_quiver({"1", "2", "3"}, {{"a", "2", "1"}});
  CHECK_FALSE(is_connected(split));
  CHECK(connected_components(split).size() == 2);
  CHECK_FALSE(is_connected(make_quiver(std::vector<std::string>{}, {})));

  const std::vector<std::size_t> block{1, 2};
  CHECK(restrict_to(DimVector{2, 3, 2}, block) == DimVector{3, 2});
  CHECK(embed_from(DimVector{3, 2}, block, 3) == DimVector{0, 3, 2});
  CHECK(isomorphic(a2(), a2_reversed()));
  CHECK_FALSE(isomorphic(a3(), a3_source_middle()));
}
