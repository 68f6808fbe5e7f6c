#include "qdilog/strata.hpp"

#include <algorithm>

namespace qdilog {

namespace {

struct Word {
  std::vector<std::size_t> letters;
  int sign = 1;
  long v_power = 0;
};

// y_g as a signed, v-weighted word in the unit symbols.
Word expand_symbol(const Quiver& q, const std::vector<std::size_t>& basis, DimVector g) {
  const IntMatrix lam = lambda_matrix(q);
  Word w;
  while (!g.is_zero()) {
    std::size_t i = basis.front();
    for (auto v : basis) {
      if (g[v] > 0) {
        i = v;
        break;
      }
    }
    const DimVector rest = g - q.unit(i);
    w.letters.push_back(i);
    if (rest.is_zero()) break;
    w.sign = -w.sign;
    w.v_power -= bilinear(lam, q.unit(i), rest);
    g = rest;
  }
  return w;
}

int parity(long x) { return static_cast<int>(((x % 2) + 2) % 2); }

const KostantPartition& block_series(const SubquiverPartition& p, const KostantSeries& m,
                                     std::size_t j) {
  if (m.per_block.size() != p.size()) {
    throw Error(ErrorKind::IncompatibleSeries, "Kostant series has " +
                                                   std::to_string(m.per_block.size()) +
                                                   " blocks, partition has " +
                                                   std::to_string(p.size()));
  }
  const auto& part = m.per_block[j];
  if (part.roots != positive_roots(p.quivers[j]) ||
      part.multiplicities.size() != part.roots.size()) {
    throw Error(ErrorKind::IncompatibleSeries,
                "Kostant series block " + std::to_string(j) + " is not over the block's roots");
  }
  return part;
}

void check_total(const Quiver& q, const SubquiverPartition& p, const KostantSeries& m,
                 const DimVector& gamma) {
  DimVector total = q.zero();
  for (std::size_t j = 0; j < p.size(); ++j) {
    total += embed_from(block_series(p, m, j).total(), p.blocks[j], q.num_vertices());
  }
  if (!(total == gamma)) {
    throw Error(ErrorKind::IncompatibleSeries,
                "Kostant series sums to " + to_string(total) + ", not " + to_string(gamma));
  }
}

CodimReport codim_from_form(const KostantSeries& m, const std::vector<SymbolPower>& factors,
                            MonomialNormalForm form) {
  long sum_m2 = 0;
  long s_formula = 0;
  for (const auto& f : factors) {
    sum_m2 += static_cast<long>(f.exponent) * f.exponent;
    s_formula += static_cast<long>(f.exponent) * (f.root.height() - 1);
  }
  const long twice = form.v_power - form.gamma.squared_norm() + sum_m2;
  if (twice < 0 || twice % 2 != 0) {
    throw Error(ErrorKind::InconsistentCodim,
                "codimension " + std::to_string(twice) + "/2 is not a non-negative integer");
  }
  const int sign_parity = form.sign < 0 ? 1 : 0;
  if (sign_parity != parity(s_formula)) {
    throw Error(ErrorKind::InconsistentCodim,
                "sign of Y_m disagrees with sum_u m_u(|phi_u| - 1) = " +
                    std::to_string(s_formula));
  }
  CodimReport r;
  r.series = m;
  r.form = std::move(form);
  r.codim = twice / 2;
  r.sign_exponent_parity = sign_parity;
  return r;
}

}  // namespace

MonomialNormalForm normal_form(const Quiver& q, const std::vector<SymbolPower>& factors) {
  const auto basis = topological_vertex_order(q);
  const auto pos = basis.positions();
  const IntMatrix lam = lambda_matrix(q);

  MonomialNormalForm out;
  out.gamma = q.zero();
  std::vector<std::size_t> word;
  for (const auto& f : factors) {
    if (f.exponent < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    if (f.root.is_zero()) continue;
    const Word w = expand_symbol(q, basis.sequence, f.root);
    for (int k = 0; k < f.exponent; ++k) {
      word.insert(word.end(), w.letters.begin(), w.letters.end());
      out.sign *= w.sign;
      out.v_power += w.v_power;
    }
  }
  // y_x y_y = v^{2 lambda(e_x, e_y)} y_y y_x
  for (std::size_t pass = 0; pass < word.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      const auto x = word[k];
      const auto y = word[k + 1];
      if (pos[x] > pos[y]) {
        out.v_power += 2 * lam(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));
        std::swap(word[k], word[k + 1]);
      }
    }
  }
  for (auto i : word) out.gamma[i] += 1;
  return out;
}

std::vector<SymbolPower> kostant_factors(const SubquiverPartition& p, const RootOrder& order,
                                         const KostantSeries& m) {
  std::vector<SymbolPower> out;
  for (const auto& e : order.entries) {
    if (e.block >= p.size()) {
      throw Error(ErrorKind::InvalidOrder, "order refers to a block outside the partition");
    }
    const auto& part = block_series(p, m, e.block);
    const DimVector local = restrict_to(e.root, p.blocks[e.block]);
    const auto it = std::find(part.roots.begin(), part.roots.end(), local);
    if (it == part.roots.end()) {
      throw Error(ErrorKind::IncompatibleSeries, to_string(e.root) + " is not a block root");
    }
    const int k = part.multiplicities[static_cast<std::size_t>(it - part.roots.begin())];
    if (k != 0) out.push_back({e.root, k});
  }
  return out;
}

MonomialNormalForm monomial_normal_form(const Quiver& q, const SubquiverPartition& p,
                                        const RootOrder& order, const KostantSeries& m) {
  const auto verdict = validate_order(q, p, order);
  if (!verdict.valid) {
    throw Error(ErrorKind::InvalidOrder, "order violates the root ordering rules: " +
                                             verdict.violation->rule);
  }
  return normal_form(q, kostant_factors(p, order, m));
}

long gamma_factor_exponent(const Quiver& q, const RootOrder& order, const KostantSeries& m,
                           const SubquiverPartition& p,
                           const std::vector<std::size_t>& block_sequence) {
  std::vector<std::size_t> label(p.size(), p.size());
  for (std::size_t k = 0; k < block_sequence.size(); ++k) label.at(block_sequence[k]) = k;
  const IntMatrix lam = lambda_matrix(q);
  std::vector<std::pair<SymbolPower, std::size_t>> seq;
  for (const auto& e : order.entries) {
    for (const auto& f : kostant_factors(p, RootOrder{{e}, order.provenance}, m)) {
      seq.emplace_back(f, e.block);
    }
  }
  long exponent = 0;
  for (std::size_t u = 0; u < seq.size(); ++u) {
    for (std::size_t v = u + 1; v < seq.size(); ++v) {
      if (label[seq[u].second] > label[seq[v].second]) {
        exponent += static_cast<long>(seq[u].first.exponent) * seq[v].first.exponent *
                    bilinear(lam, seq[u].first.root, seq[v].first.root);
      }
    }
  }
  return exponent;
}

CodimReport codim_of_stratum(const Quiver& q, const SubquiverPartition& p,
                             const KostantSeries& m, const DimVector& gamma) {
  check_total(q, p, m, gamma);
  const RootOrder order = admissible_total_order(q, p);
  const auto factors = kostant_factors(p, order, m);
  return codim_from_form(m, factors, normal_form(q, factors));
}

long orbit_codim(const Quiver& dynkin, const KostantPartition& m) {
  std::vector<std::size_t> all(dynkin.num_vertices());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto p = make_partition(dynkin, {all});
  return codim_of_stratum(dynkin, p, KostantSeries{{m}}, m.total()).codim;
}

long blockwise_codim(const SubquiverPartition& p, const KostantSeries& m) {
  long total = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    total += orbit_codim(p.quivers[j], block_series(p, m, j));
  }
  return total;
}

AdditivityVerdict codim_additivity_check(const Quiver& q, const SubquiverPartition& p,
                                         const KostantSeries& m, const DimVector& gamma) {
  AdditivityVerdict v;
  v.full = codim_of_stratum(q, p, m, gamma).codim;
  for (std::size_t j = 0; j < p.size(); ++j) {
    v.per_block.push_back(orbit_codim(p.quivers[j], m.per_block[j]));
    v.block_sum += v.per_block.back();
  }
  return v;
}

BettiReport betti_identity_check(const Quiver& q, const SubquiverPartition& p,
                                 const DimVector& gamma, int v_max, std::size_t cap) {
  BettiReport r;
  r.partition = to_string(q, p);
  r.gamma = gamma;
  r.v_max = v_max;
  r.lhs = VSeries::one(v_max);
  for (std::size_t i = 0; i < gamma.size(); ++i) r.lhs *= poincare_P(gamma[i], v_max);
  r.rhs = VSeries(v_max);
  for (auto& m : kostant_series(q, p, gamma, cap)) {
    BettiTerm t;
    t.codim = blockwise_codim(p, m);
    t.value = VSeries::q_power(static_cast<int>(t.codim), v_max);
    for (const auto& part : m.per_block) {
      for (int k : part.nonzero_multiplicities()) {
        t.multiplicities.push_back(k);
        t.value *= poincare_P(k, v_max);
      }
    }
    r.rhs += t.value;
    t.series = std::move(m);
    r.terms.push_back(std::move(t));
  }
  r.differing = differing_exponents(r.lhs, r.rhs);
  return r;
}

KostantSeries restrict_partition(const SubquiverPartition& p, const KostantPartition& full) {
  KostantSeries out;
  for (std::size_t j = 0; j < p.size(); ++j) {
    KostantPartition part;
    part.roots = positive_roots(p.quivers[j]);
    part.multiplicities.assign(part.roots.size(), 0);
    for (std::size_t v = 0; v < full.roots.size(); ++v) {
      if (full.multiplicities[v] == 0) continue;
      const DimVector local = restrict_to(full.roots[v], p.blocks[j]);
      if (local.is_zero()) continue;
      const auto it = std::find(part.roots.begin(), part.roots.end(), local);
      if (it == part.roots.end()) {
        throw Error(ErrorKind::IncompatibleSeries,
                    to_string(full.roots[v]) + " does not restrict to a root of block " +
                        std::to_string(j));
      }
      part.multiplicities[static_cast<std::size_t>(it - part.roots.begin())] +=
          full.multiplicities[v];
    }
    out.per_block.push_back(std::move(part));
  }
  return out;
}

std::vector<KostantPartition> stratum_orbit_decomposition(const Quiver& q,
                                                          const SubquiverPartition& p,
                                                          const KostantSeries& m,
                                                          const DimVector& gamma,
                                                          std::size_t cap) {
  bool type_a = false;
  if (q.num_vertices() > 0 && is_connected(q)) {
    const auto kind = classify_dynkin(q);
    const auto* t = std::get_if<DynkinType>(&kind);
    type_a = t && t->family == DynkinFamily::A;
  }
  if (!type_a) {
    throw Error(ErrorKind::NotTypeA, "orbit decomposition needs a quiver of type A");
  }
  check_total(q, p, m, gamma);
  std::vector<KostantPartition> out;
  for (auto& full : kostant_partitions(q, gamma, cap)) {
    if (restrict_partition(p, full) == m) out.push_back(std::move(full));
  }
  return out;
}

}  // namespace qdilog
