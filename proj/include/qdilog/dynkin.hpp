#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "qdilog/quiver.hpp"

namespace qdilog {

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  int rank = 1;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

std::string to_string(const DynkinType& t);

/// Why a connected quiver is not an ADE orientation.
struct NotDynkin {
  std::string reason;
};

/// Recognise the underlying undirected graph of a connected, nonempty quiver.
/// Throws Error(NotConnected / InvalidArgument) for disconnected or empty input.
std::variant<DynkinType, NotDynkin> classify_dynkin(const Quiver& q);

/// classify_dynkin, throwing Error(NotDynkin) on failure.
DynkinType require_dynkin(const Quiver& q);

/// Number of positive roots of the type.
std::size_t root_count(const DynkinType& t);

/// Positive roots of a Dynkin quiver: every nonzero vector in the box
/// 0 <= g(i) <= 6 with chi(g, g) == 1. Ordered by height, then with larger
/// leading entries first (so simple roots appear in vertex order).
std::vector<DimVector> positive_roots(const Quiver& q);

/// The library-wide root ordering used by positive_roots.
bool root_order_less(const DimVector& a, const DimVector& b);

inline constexpr std::size_t kDefaultKostantCap = 1'000'000;

/// Multiplicities m_v aligned with `roots`; sum of m_v * roots[v] is the
/// target vector.
struct KostantPartition {
  std::vector<DimVector> roots;
  std::vector<int> multiplicities;

  DimVector total() const;
  /// Nonzero multiplicities, in root order.
  std::vector<int> nonzero_multiplicities() const;

  friend bool operator==(const KostantPartition&, const KostantPartition&) = default;
};

std::string to_string(const KostantPartition& m);

/// All Kostant partitions of gamma over the given root list, in the
/// enumeration order induced by the root list. Throws CapExceeded if more
/// than `cap` partitions exist.
std::vector<KostantPartition> kostant_partitions(const std::vector<DimVector>& roots,
                                                 const DimVector& gamma,
                                                 std::size_t cap = kDefaultKostantCap);

std::vector<KostantPartition> kostant_partitions(const Quiver& q, const DimVector& gamma,
                                                 std::size_t cap = kDefaultKostantCap);

}  // namespace qdilog
