#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qdilog/quantum_algebra.hpp"
#include "qdilog/strata.hpp"

namespace qdilog::testing {

struct NamedQuiver {
  std::string name;
  Quiver quiver;
};

inline Quiver make_quiver(std::vector<std::string> vertices,
                          const std::vector<std::tuple<std::string, std::string, std::string>>& arrows) {
  return Quiver::from_names(std::move(vertices), arrows);
}

inline Quiver a2() { return make_quiver({"1", "2"}, {{"a", "2", "1"}}); }
inline Quiver a2_reversed() { return make_quiver({"1", "2"}, {{"a", "1", "2"}}); }
inline Quiver a3() { return make_quiver({"1", "2", "3"}, {{"a", "2", "1"}, {"b", "3", "2"}}); }
inline Quiver a3_sink_middle() {
  return make_quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "3", "2"}});
}
inline Quiver a3_source_middle() {
  return make_quiver({"1", "2", "3"}, {{"a", "2", "1"}, {"b", "2", "3"}});
}
inline Quiver a4() {
  return make_quiver({"1", "2", "3", "4"}, {{"a", "2", "1"}, {"b", "3", "2"}, {"c", "4", "3"}});
}
inline Quiver d4() {
  return make_quiver({"1", "2", "3", "4"}, {{"a", "2", "1"}, {"b", "3", "1"}, {"c", "4", "1"}});
}
inline Quiver kronecker() { return make_quiver({"1", "2"}, {{"a", "2", "1"}, {"b", "2", "1"}}); }
inline Quiver a2_tilde() {
  return make_quiver({"1", "2", "3"}, {{"a", "2", "1"}, {"b", "3", "2"}, {"c", "3", "1"}});
}

/// A2 (both orientations), A3 (three orientations), A4, D4, affine A2.
inline std::vector<NamedQuiver> test_matrix() {
  return {{"A2", a2()},
          {"A2 reversed", a2_reversed()},
          {"A3", a3()},
          {"A3 sink middle", a3_sink_middle()},
          {"A3 source middle", a3_source_middle()},
          {"A4", a4()},
          {"D4", d4()},
          {"affine A2", a2_tilde()}};
}

inline DimVector uniform_vector(std::size_t n, int value) {
  DimVector g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = value;
  return g;
}

inline std::vector<std::vector<std::size_t>> index_blocks(
    std::initializer_list<std::initializer_list<std::size_t>> blocks) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : blocks) out.emplace_back(b);
  return out;
}

/// Deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1)); }
  bool coin() { return uniform(0, 1) == 1; }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[index(xs.size())];
  }

  /// Vector with entries in [0, bound(i)].
  DimVector below(const DimVector& bound) {
    DimVector g(bound.size());
    for (std::size_t i = 0; i < bound.size(); ++i) g[i] = uniform(0, bound[i]);
    return g;
  }

  DimVector nonzero_below(const DimVector& bound) {
    for (;;) {
      DimVector g = below(bound);
      if (!g.is_zero()) return g;
    }
  }

  /// Small integer polynomial in v with non-negative support.
  VSeries series(int v_max, int max_degree = 4, int max_coeff = 3) {
    const int lo = uniform(0, max_degree);
    std::vector<Integer> c(static_cast<std::size_t>(uniform(1, 3)));
    for (auto& x : c) x = uniform(-max_coeff, max_coeff);
    return VSeries::from_coefficients(lo, std::move(c), v_max);
  }

  QuantumElement element(const AlgebraPtr& a, int terms) {
    QuantumElement x(a);
    for (int t = 0; t < terms; ++t) x.add_term(below(a->bound()), series(a->v_max()));
    return x;
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), eng_);
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

/// Outcome of one property sweep.
struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void fail(const std::string& msg) {
    if (failures++ == 0) first_failure = msg;
  }
};

/// A random admissible (quiver, partition, gamma, Kostant series) sample.
struct StratumCase {
  Quiver quiver;
  SubquiverPartition partition;
  DimVector gamma;
  KostantSeries series;
  std::string label;
};

inline StratumCase random_stratum_case(Gen& g, int max_entry = 3, std::size_t min_blocks = 1) {
  const auto matrix = test_matrix();
  for (;;) {
    const auto& nq = g.pick(matrix);
    auto parts = enumerate_partitions(nq.quiver, true);
    std::erase_if(parts, [&](const auto& p) { return p.size() < min_blocks; });
    if (parts.empty()) continue;
    const auto& p = g.pick(parts);
    const DimVector gamma = g.below(uniform_vector(nq.quiver.num_vertices(), max_entry));
    const auto series = kostant_series(nq.quiver, p, gamma);
    const auto& m = g.pick(series);
    return {nq.quiver, p, gamma, m,
            nq.name + " " + to_string(nq.quiver, p) + " gamma " + to_string(gamma) + " m " +
                to_string(m)};
  }
}

inline int v_exponent(const VSeries& monomial) { return monomial.min_exp(); }

/// (x y) z == x (y z) on random elements.
inline PropertyResult associativity_property(int cases, std::uint64_t seed) {
  PropertyResult r{"associativity"};
  Gen g(seed);
  const auto matrix = test_matrix();
  for (int c = 0; c < cases; ++c) {
    const auto& nq = g.pick(matrix);
    const auto a = make_algebra(nq.quiver, g.below(uniform_vector(nq.quiver.num_vertices(), 2)), 16);
    const auto x = g.element(a, g.uniform(1, 4));
    const auto y = g.element(a, g.uniform(1, 4));
    const auto z = g.element(a, g.uniform(1, 4));
    ++r.cases;
    if (!((x * y) * z == x * (y * z))) r.fail(nq.name + ": (xy)z != x(yz) for x = " + to_string(x));
  }
  return r;
}

/// y_a y_b = q^{lambda(a, b)} y_b y_a and y_{a+b} = -q^{-lambda(a, b)/2} y_a y_b.
inline PropertyResult commutation_property(int cases, std::uint64_t seed) {
  PropertyResult r{"commutation relation"};
  Gen g(seed);
  const auto matrix = test_matrix();
  const int v_max = 200;
  for (int c = 0; c < cases; ++c) {
    const auto& nq = g.pick(matrix);
    const auto n = nq.quiver.num_vertices();
    const bool units = c % 2 == 0;
    const DimVector x = units ? nq.quiver.unit(g.index(n)) : g.nonzero_below(uniform_vector(n, 2));
    const DimVector y = units ? nq.quiver.unit(g.index(n)) : g.nonzero_below(uniform_vector(n, 2));
    const auto a = make_algebra(nq.quiver, x + y, v_max);
    const long lam = lambda(nq.quiver, x, y);
    const auto xy = symbol(a, x) * symbol(a, y);
    const auto yx = symbol(a, y) * symbol(a, x);
    ++r.cases;
    if (!(xy == yx * VSeries::v_power(static_cast<int>(2 * lam), v_max))) {
      r.fail(nq.name + ": commutation fails for " + to_string(x) + ", " + to_string(y));
      continue;
    }
    const auto rhs = xy * VSeries::monomial(-1, static_cast<int>(-lam), v_max);
    if (!(symbol(a, x + y) == rhs)) {
      r.fail(nq.name + ": defining relation fails for " + to_string(x) + ", " + to_string(y));
    }
  }
  return r;
}

/// y_g^k = (-1)^{k-1} y_{kg} for k <= 5.
inline PropertyResult power_property(int cases, std::uint64_t seed) {
  PropertyResult r{"symbol powers"};
  Gen g(seed);
  const auto matrix = test_matrix();
  for (int c = 0; c < cases; ++c) {
    const auto& nq = g.pick(matrix);
    const DimVector x = g.nonzero_below(uniform_vector(nq.quiver.num_vertices(), 1));
    const int k = g.uniform(1, 5);
    const auto a = make_algebra(nq.quiver, k * x, 400);
    const auto expected = symbol(a, k * x) * VSeries::monomial(k % 2 == 1 ? 1 : -1, 0, 400);
    ++r.cases;
    if (!(power(symbol(a, x), k) == expected)) {
      r.fail(nq.name + ": y_g^" + std::to_string(k) + " wrong for g = " + to_string(x));
    }
  }
  return r;
}

/// Sign of Y_m against sum_u m_u (|phi_u| - 1).
inline PropertyResult sign_parity_property(int cases, std::uint64_t seed) {
  PropertyResult r{"s_m parity"};
  Gen g(seed);
  for (int c = 0; c < cases; ++c) {
    const auto s = random_stratum_case(g);
    const auto order = admissible_total_order(s.quiver, s.partition);
    const auto factors = kostant_factors(s.partition, order, s.series);
    long formula = 0;
    for (const auto& f : factors) formula += static_cast<long>(f.exponent) * (f.root.height() - 1);
    const auto form = normal_form(s.quiver, factors);
    ++r.cases;
    if ((form.sign < 0) != (formula % 2 != 0)) r.fail(s.label);
  }
  return r;
}

/// For any labelling of the blocks, regrouping Y_m block by block costs exactly
/// the factor Gamma, in both of its forms.
inline PropertyResult gamma_cancellation_property(int cases, std::uint64_t seed) {
  PropertyResult r{"Gamma cancellation under block reordering"};
  Gen g(seed);
  for (int c = 0; c < cases; ++c) {
    const auto s = random_stratum_case(g, 3, 2);
    const auto& q = s.quiver;
    const auto order = admissible_total_order(q, s.partition);
    const auto reference = normal_form(q, kostant_factors(s.partition, order, s.series));

    const auto sigma = g.permutation(s.partition.size());
    std::vector<SymbolPower> grouped;
    for (auto j : sigma) {
      RootOrder block;
      for (const auto& e : order.entries) {
        if (e.block == j) block.entries.push_back(e);
      }
      for (auto& f : kostant_factors(s.partition, block, s.series)) grouped.push_back(f);
    }
    auto regrouped = normal_form(q, grouped);
    const long gamma_exp = gamma_factor_exponent(q, order, s.series, s.partition, sigma);

    // Arrow form: minus the sum of gamma(ta) gamma(ha) over arrows running
    // from an earlier label to a later one.
    std::vector<std::size_t> label(s.partition.size());
    for (std::size_t k = 0; k < sigma.size(); ++k) label[sigma[k]] = k;
    const auto owner = s.partition.owner(q.num_vertices());
    long arrow_exp = 0;
    for (const auto& a : q.arrows()) {
      if (label[owner[a.tail]] < label[owner[a.head]]) {
        arrow_exp -= static_cast<long>(s.gamma[a.tail]) * s.gamma[a.head];
      }
    }
    regrouped.v_power += 2 * gamma_exp;
    ++r.cases;
    if (!(regrouped == reference)) {
      r.fail(s.label + ": Gamma-corrected normal form differs");
    } else if (gamma_exp != arrow_exp) {
      r.fail(s.label + ": Gamma exponent " + std::to_string(gamma_exp) + " vs arrow form " +
             std::to_string(arrow_exp));
    }
  }
  return r;
}

/// Coefficient of y^g in E_Q is (-1)^{|g|} q^{sum g(i)^2 / 2} prod P_{g(i)}.
inline PropertyResult closed_form_property(int cases, std::uint64_t seed) {
  PropertyResult r{"closed-form coefficient of E_Q"};
  Gen g(seed);
  const auto matrix = test_matrix();
  const int v_max = 30;
  while (r.cases < cases) {
    const auto& nq = g.pick(matrix);
    const auto n = nq.quiver.num_vertices();
    const auto a = make_algebra(nq.quiver, g.below(uniform_vector(n, 3)), v_max);
    const auto e = trivial_dt(a);
    for (int t = 0; t < 8 && r.cases < cases; ++t) {
      const DimVector x = g.below(a->bound());
      VSeries expected = VSeries::monomial(x.height() % 2 == 0 ? 1 : -1,
                                           static_cast<int>(x.squared_norm()), v_max);
      for (std::size_t i = 0; i < n; ++i) expected *= poincare_P(x[i], v_max);
      ++r.cases;
      if (!(e.coefficient(x) == expected)) r.fail(nq.name + " at y^" + to_string(x));
    }
  }
  return r;
}

}  // namespace qdilog::testing
