#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdilog/partitions.hpp"

namespace qdilog {

/// Total order on the union of the blocks' positive roots. Roots are in
/// full-quiver coordinates; `block` indexes the partition the order was built
/// for.
struct RootOrder {
  struct Entry {
    DimVector root;
    std::size_t block = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };
  enum class Provenance { Constructed, UserSupplied };

  std::vector<Entry> entries;
  Provenance provenance = Provenance::UserSupplied;

  std::vector<DimVector> roots() const;
};

std::string to_string(const RootOrder& order);

/// Positive roots of a Dynkin quiver ordered so that u < v implies
/// lambda(beta_u, beta_v) >= 0: a topological sort of the constraint digraph
/// with ties broken by the library root order. Throws ConstraintCycle.
std::vector<DimVector> reineke_inner_order(const Quiver& block);

/// Orders the blocks head-before-tail and concatenates each block's inner
/// order. Block indices in the result refer to `p` as given.
RootOrder admissible_total_order(const Quiver& q, const SubquiverPartition& p);

/// Which rule set validate_order applies within a block.
enum class OrderRules {
  /// lambda >= 0 within a block, lambda <= 0 across blocks.
  Admissible,
  /// Within a block, lambda restricted to the block's arrows must be >= 0 and
  /// lambda restricted to the remaining arrows <= 0; across blocks lambda <= 0.
  Strict,
};

struct OrderViolation {
  std::size_t first = 0;   ///< position of the earlier root
  std::size_t second = 0;  ///< position of the later root
  long lambda_value = 0;
  bool same_block = false;
  std::string rule;
};

struct OrderVerdict {
  bool valid = true;
  std::optional<OrderViolation> violation;
};

/// Checks every ordered pair. Throws InvalidOrder if `candidate` is not a
/// permutation of the partition's roots.
OrderVerdict validate_order(const Quiver& q, const SubquiverPartition& p,
                            const RootOrder& candidate,
                            OrderRules rules = OrderRules::Admissible);

/// The partition's roots, block by block, in library root order.
RootOrder partition_roots(const SubquiverPartition& p, std::size_t num_vertices);

/// Every valid order, by exhaustive permutation search. Factorial cost:
/// refuses more than `max_roots` roots.
std::vector<RootOrder> brute_force_valid_orders(const Quiver& q, const SubquiverPartition& p,
                                                OrderRules rules = OrderRules::Admissible,
                                                std::size_t max_roots = 9);

}  // namespace qdilog
