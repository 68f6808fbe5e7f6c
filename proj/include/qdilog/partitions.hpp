#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdilog/dynkin.hpp"
#include "qdilog/quiver.hpp"

namespace qdilog {

/// How the arrows of each block are chosen.
enum class BlockArrows {
  /// Every arrow with both ends in the block (the default).
  Induced,
  /// Induced arrows when they form a Dynkin quiver; otherwise the first
  /// spanning arrow subset (in arrow input order) that does. Dropped arrows
  /// become loops of the contraction. For diagnosing non-admissible blocks.
  DynkinSpanning,
};

/// Ordered list of vertex blocks, each carrying a connected Dynkin subquiver.
struct SubquiverPartition {
  std::vector<std::vector<std::size_t>> blocks;        ///< vertex indices, ascending
  std::vector<std::vector<std::size_t>> block_arrows;  ///< arrow indices of q per block
  std::vector<Quiver> quivers;                         ///< block subquivers
  std::vector<DynkinType> types;

  std::size_t size() const { return blocks.size(); }
  /// owner[v] is the block containing vertex v.
  std::vector<std::size_t> owner(std::size_t num_vertices) const;
  /// Same partition with blocks listed in the order perm[0], perm[1], ...
  SubquiverPartition permuted(const std::vector<std::size_t>& perm) const;
};

std::string to_string(const Quiver& q, const SubquiverPartition& p);

SubquiverPartition make_partition(const Quiver& q, std::vector<std::vector<std::size_t>> blocks,
                                  BlockArrows mode = BlockArrows::Induced);
SubquiverPartition make_partition(const Quiver& q,
                                  const std::vector<std::vector<std::string>>& blocks,
                                  BlockArrows mode = BlockArrows::Induced);

/// Every partition of the vertex set into connected Dynkin blocks (induced
/// arrows). Blocks are listed by their minimum vertex; partitions are in the
/// order produced by growing the block of the first unassigned vertex.
std::vector<SubquiverPartition> enumerate_partitions(const Quiver& q, bool admissible_only);

/// Directed cycle of the contraction: blocks b0, b1, ..., b0 and the arrow
/// ids traversed.
struct ContractionCycle {
  std::vector<std::size_t> blocks;
  std::vector<std::string> arrows;

  std::size_t length() const { return arrows.size(); }
};

struct AdmissibilityVerdict {
  bool admissible = false;
  /// Every contraction arrow already goes from a later block to an earlier one.
  bool ordered = false;
  std::optional<ContractionCycle> witness;
};

Quiver contraction_quiver(const Quiver& q, const SubquiverPartition& p);

/// Admissible iff the contraction is acyclic. The witness is a shortest
/// cycle, so loops are reported before 2-cycles before longer cycles.
AdmissibilityVerdict check_admissible(const Quiver& q, const SubquiverPartition& p);

/// Returns true if the closed walk is a genuine cycle of the contraction.
bool is_contraction_cycle(const Quiver& contracted, const ContractionCycle& c);

/// Permute blocks so every contraction arrow points from a later block to an
/// earlier one (stable in the current block order). Throws NotAdmissible.
SubquiverPartition order_blocks(const Quiver& q, const SubquiverPartition& p);

/// One Kostant partition per block, over the block's own vertices.
struct KostantSeries {
  std::vector<KostantPartition> per_block;

  friend bool operator==(const KostantSeries&, const KostantSeries&) = default;
};

std::string to_string(const KostantSeries& m);

/// Cartesian product of the per-block Kostant partitions of the restricted
/// vectors, first block varying slowest.
std::vector<KostantSeries> kostant_series(const Quiver& q, const SubquiverPartition& p,
                                          const DimVector& gamma,
                                          std::size_t cap = kDefaultKostantCap);

}  // namespace qdilog
