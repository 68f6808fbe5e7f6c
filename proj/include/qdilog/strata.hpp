#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qdilog/partitions.hpp"
#include "qdilog/qseries.hpp"
#include "qdilog/root_order.hpp"

namespace qdilog {

/// sign · v^{v_power} · y^gamma, with y^gamma the product of the y_{e_i}
/// powers in head-before-tail order.
struct MonomialNormalForm {
  int sign = 1;
  long v_power = 0;
  DimVector gamma;

  friend bool operator==(const MonomialNormalForm&, const MonomialNormalForm&) = default;
};

/// y_root^exponent.
struct SymbolPower {
  DimVector root;
  int exponent = 0;
};

/// Rewrites y_{g1}^{k1} ... y_{gr}^{kr} in normal form using exact sign and
/// exponent bookkeeping: each symbol is expanded into unit letters by
/// y_{e_i + g'} = -v^{-lambda(e_i, g')} y_{e_i} y_{g'}, and the letters are
/// then bubble-sorted into basis order.
MonomialNormalForm normal_form(const Quiver& q, const std::vector<SymbolPower>& factors);

/// The factors of Y_m along `order`. Throws IncompatibleSeries if m does not
/// match p.
std::vector<SymbolPower> kostant_factors(const SubquiverPartition& p, const RootOrder& order,
                                         const KostantSeries& m);

/// Normal form of Y_m = y_{phi_1}^{m_1} ... y_{phi_r}^{m_r}. Throws
/// InvalidOrder or IncompatibleSeries.
MonomialNormalForm monomial_normal_form(const Quiver& q, const SubquiverPartition& p,
                                        const RootOrder& order, const KostantSeries& m);

/// Exponent of q in the block-reordering factor: Y_m = q^e (Y^{b0} ... Y^{bk})
/// where the Y^j are the per-block products and b0, ..., bk is `block_sequence`.
long gamma_factor_exponent(const Quiver& q, const RootOrder& order, const KostantSeries& m,
                           const SubquiverPartition& p,
                           const std::vector<std::size_t>& block_sequence);

struct CodimReport {
  KostantSeries series;
  MonomialNormalForm form;
  long codim = 0;
  int sign_exponent_parity = 0;

  friend bool operator==(const CodimReport&, const CodimReport&) = default;
};

/// codim = w_m - (1/2) sum gamma(i)^2 + (1/2) sum m_u^2 from the normal form
/// over admissible_total_order. Throws NotAdmissible, IncompatibleSeries, or
/// InconsistentCodim (odd or negative codim, or a sign that disagrees with
/// sum_u m_u (|phi_u| - 1)).
CodimReport codim_of_stratum(const Quiver& q, const SubquiverPartition& p,
                             const KostantSeries& m, const DimVector& gamma);

/// Codimension of the orbit of a Dynkin quiver indexed by m.
long orbit_codim(const Quiver& dynkin, const KostantPartition& m);

/// Sum of the per-block orbit codimensions. Needs no admissibility.
long blockwise_codim(const SubquiverPartition& p, const KostantSeries& m);

struct AdditivityVerdict {
  long full = 0;
  long block_sum = 0;
  std::vector<long> per_block;

  bool equal() const { return full == block_sum; }
};

AdditivityVerdict codim_additivity_check(const Quiver& q, const SubquiverPartition& p,
                                         const KostantSeries& m, const DimVector& gamma);

struct BettiTerm {
  KostantSeries series;
  long codim = 0;
  std::vector<int> multiplicities;  ///< nonzero m_u
  VSeries value;                    ///< q^codim P_{m_1} ... P_{m_r}

  friend bool operator==(const BettiTerm&, const BettiTerm&) = default;
};

struct BettiReport {
  std::string partition;
  DimVector gamma;
  int v_max = 0;
  VSeries lhs;  ///< P_{gamma(1)} ... P_{gamma(n)}
  VSeries rhs;
  std::vector<BettiTerm> terms;
  std::vector<int> differing;  ///< v-exponents where the sides disagree

  bool passed() const { return differing.empty(); }

  friend bool operator==(const BettiReport&, const BettiReport&) = default;
};

/// Compares prod_i P_{gamma(i)} with sum_m q^{codim} prod_u P_{m_u}. The
/// codimension of each stratum is taken block by block, so p need not be
/// admissible.
BettiReport betti_identity_check(const Quiver& q, const SubquiverPartition& p,
                                 const DimVector& gamma, int v_max = kDefaultVMax,
                                 std::size_t cap = kDefaultKostantCap);

/// Full-quiver Kostant partitions of gamma lying in the stratum of m, for a
/// quiver whose underlying graph is a path. A root restricts to a block by
/// intersecting supports. Throws NotTypeA.
std::vector<KostantPartition> stratum_orbit_decomposition(const Quiver& q,
                                                          const SubquiverPartition& p,
                                                          const KostantSeries& m,
                                                          const DimVector& gamma,
                                                          std::size_t cap = kDefaultKostantCap);

/// Restriction of a full-quiver Kostant partition to the blocks of p.
KostantSeries restrict_partition(const SubquiverPartition& p, const KostantPartition& full);

}  // namespace qdilog
