#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <Eigen/Core>

#include "qdilog/error.hpp"

namespace qdilog {

using IntMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

/// Per-vertex non-negative integer vector, indexed by vertex position in the
/// associated quiver. Also used for positive roots.
class DimVector {
 public:
  using Storage = Eigen::Matrix<int, Eigen::Dynamic, 1>;

  DimVector() = default;
  explicit DimVector(std::size_t n) : v_(Storage::Zero(static_cast<Eigen::Index>(n))) {}
  explicit DimVector(Storage v) : v_(std::move(v)) {}
  DimVector(std::initializer_list<int> entries);

  static DimVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return static_cast<std::size_t>(v_.size()); }
  int operator[](std::size_t i) const { return v_(static_cast<Eigen::Index>(i)); }
  int& operator[](std::size_t i) { return v_(static_cast<Eigen::Index>(i)); }
  const Storage& values() const { return v_; }

  /// Sum of entries.
  int height() const { return v_.sum(); }
  long squared_norm() const;
  bool is_zero() const { return v_.isZero(); }
  bool is_nonnegative() const { return (v_.array() >= 0).all(); }
  /// Componentwise partial order.
  bool leq(const DimVector& other) const;

  friend DimVector operator+(const DimVector& a, const DimVector& b);
  friend DimVector operator-(const DimVector& a, const DimVector& b);
  friend DimVector operator*(int k, const DimVector& a);
  DimVector& operator+=(const DimVector& other);

  friend bool operator==(const DimVector& a, const DimVector& b);
  /// Lexicographic; sizes compared first.
  friend std::strong_ordering operator<=>(const DimVector& a, const DimVector& b);

 private:
  Storage v_;
};

std::string to_string(const DimVector& g);

struct Arrow {
  std::string id;
  std::size_t tail = 0;
  std::size_t head = 0;
};

enum class LoopPolicy { Reject, Allow };

/// Directed multigraph with named vertices and arrows. Immutable after
/// construction.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
         LoopPolicy loops = LoopPolicy::Reject);

  /// Arrows given as (id, tail name, head name).
  static Quiver from_names(
      std::vector<std::string> vertices,
      const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
      LoopPolicy loops = LoopPolicy::Reject);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex_name(std::size_t i) const { return vertices_.at(i); }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  std::size_t vertex_index(std::string_view name) const;
  std::optional<std::size_t> find_arrow(std::string_view id) const;

  bool has_loops() const;
  /// A(i, j) = number of arrows i -> j.
  const IntMatrix& arrow_matrix() const { return adjacency_; }

  DimVector zero() const { return DimVector(num_vertices()); }
  DimVector unit(std::size_t i) const { return DimVector::unit(num_vertices(), i); }

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  IntMatrix adjacency_;
};

/// Permutation of vertex indices in which the head of every arrow precedes
/// its tail.
struct VertexOrder {
  std::vector<std::size_t> sequence;

  /// position[v] is the index of vertex v in `sequence`.
  std::vector<std::size_t> positions() const;
};

VertexOrder topological_vertex_order(const Quiver& q);
bool is_acyclic(const Quiver& q);

/// Integer matrix E with chi(g1, g2) = g1^T E g2.
IntMatrix euler_matrix(const Quiver& q);
/// Integer matrix L with lambda(g1, g2) = g1^T L g2; L(i, j) counts arrows
/// i -> j minus arrows j -> i.
IntMatrix lambda_matrix(const Quiver& q);
IntMatrix lambda_matrix(const Quiver& q, std::span<const std::size_t> arrow_subset);

long euler_form(const Quiver& q, const DimVector& g1, const DimVector& g2);
long lambda(const Quiver& q, const DimVector& g1, const DimVector& g2);
/// lambda computed from the arrows in `arrow_subset` only (indices into
/// q.arrows()).
long lambda_restricted(const Quiver& q, std::span<const std::size_t> arrow_subset,
                       const DimVector& g1, const DimVector& g2);
/// Same, with the subset given by arrow id.
long lambda_restricted(const Quiver& q, const std::vector<std::string>& arrow_ids,
                       const DimVector& g1, const DimVector& g2);

template <typename Derived>
long bilinear(const Eigen::MatrixBase<Derived>& form, const DimVector& g1,
              const DimVector& g2) {
  return g1.values().template cast<long>().dot(form * g2.values().template cast<long>());
}

/// Subquiver on `vertex_subset` with every arrow whose ends both lie in it.
/// Vertices keep the input order of q.
Quiver induced_subquiver(const Quiver& q, std::span<const std::size_t> vertex_subset);
Quiver induced_subquiver(const Quiver& q, const std::vector<std::string>& names);

/// Subquiver on `vertex_subset` keeping only the listed arrows.
Quiver subquiver(const Quiver& q, std::span<const std::size_t> vertex_subset,
                 std::span<const std::size_t> arrow_subset);

/// Arrow indices of q with both ends in `vertex_subset`.
std::vector<std::size_t> internal_arrows(const Quiver& q,
                                         std::span<const std::size_t> vertex_subset);

/// Contract each block to one vertex. Arrows internal to a block are removed;
/// all others are kept (loops and parallel arrows included).
Quiver contraction(const Quiver& q, const std::vector<std::vector<std::size_t>>& blocks);
/// Contract each block, removing only the arrows listed in `block_arrows`;
/// any other arrow with both ends in one block becomes a loop.
Quiver contraction(const Quiver& q, const std::vector<std::vector<std::size_t>>& blocks,
                   const std::vector<std::vector<std::size_t>>& block_arrows);

/// Name given to a contracted block, e.g. "{2,3}".
std::string block_name(const Quiver& q, std::span<const std::size_t> block);

/// Connected components of the underlying graph, each in input vertex order.
std::vector<std::vector<std::size_t>> connected_components(const Quiver& q);
bool is_connected(const Quiver& q);

/// Vertex-and-arrow isomorphism test by brute force over vertex bijections
/// (small quivers only).
bool isomorphic(const Quiver& a, const Quiver& b);

DimVector restrict_to(const DimVector& g, std::span<const std::size_t> vertices);
DimVector embed_from(const DimVector& local, std::span<const std::size_t> vertices,
                     std::size_t n);

}  // namespace qdilog

template <>
struct std::hash<qdilog::DimVector> {
  std::size_t operator()(const qdilog::DimVector& g) const noexcept;
};
