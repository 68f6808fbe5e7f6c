#include "qdilog/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace qdilog {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::DanglingArrow: return "DanglingArrow";
    case ErrorKind::LoopArrow: return "LoopArrow";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::KeyMismatch: return "KeyMismatch";
    case ErrorKind::CyclicQuiver: return "CyclicQuiver";
    case ErrorKind::NotDynkin: return "NotDynkin";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::ConstraintCycle: return "ConstraintCycle";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::TruncationMismatch: return "TruncationMismatch";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::IncompatibleSeries: return "IncompatibleSeries";
    case ErrorKind::InconsistentCodim: return "InconsistentCodim";
    case ErrorKind::NotTypeA: return "NotTypeA";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

// ---------------------------------------------------------------- DimVector

DimVector::DimVector(std::initializer_list<int> entries)
    : v_(static_cast<Eigen::Index>(entries.size())) {
  Eigen::Index i = 0;
  for (int e : entries) v_(i++) = e;
}

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  DimVector g(n);
  g[i] = 1;
  return g;
}

long DimVector::squared_norm() const {
  return v_.cast<long>().squaredNorm();
}

bool DimVector::leq(const DimVector& other) const {
  if (size() != other.size()) {
    throw Error(ErrorKind::KeyMismatch, "dimension vectors of different length");
  }
  return (v_.array() <= other.v_.array()).all();
}

static void require_same_size(const DimVector& a, const DimVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::KeyMismatch, "dimension vectors of different length");
  }
}

DimVector operator+(const DimVector& a, const DimVector& b) {
  require_same_size(a, b);
  return DimVector(DimVector::Storage(a.v_ + b.v_));
}

DimVector operator-(const DimVector& a, const DimVector& b) {
  require_same_size(a, b);
  return DimVector(DimVector::Storage(a.v_ - b.v_));
}

DimVector operator*(int k, const DimVector& a) {
  return DimVector(DimVector::Storage(k * a.v_));
}

DimVector& DimVector::operator+=(const DimVector& other) {
  require_same_size(*this, other);
  v_ += other.v_;
  return *this;
}

bool operator==(const DimVector& a, const DimVector& b) {
  return a.size() == b.size() && a.v_ == b.v_;
}

std::strong_ordering operator<=>(const DimVector& a, const DimVector& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.v_.data(), a.v_.data() + a.v_.size(),
                                                b.v_.data(), b.v_.data() + b.v_.size());
}

std::string to_string(const DimVector& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) os << ',';
    os << g[i];
  }
  os << ')';
  return os.str();
}

// ------------------------------------------------------------------- Quiver

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows, LoopPolicy loops)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) {
      throw Error(ErrorKind::DuplicateVertex, "duplicate vertex id '" + v + "'");
    }
  }
  std::set<std::string> arrow_ids;
  const auto n = vertices_.size();
  adjacency_ = IntMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& a : arrows_) {
    if (!arrow_ids.insert(a.id).second) {
      throw Error(ErrorKind::Parse, "duplicate arrow id '" + a.id + "'");
    }
    if (a.tail >= n || a.head >= n) {
      throw Error(ErrorKind::DanglingArrow, "arrow '" + a.id + "' has a dangling endpoint");
    }
    if (a.tail == a.head && loops == LoopPolicy::Reject) {
      throw Error(ErrorKind::LoopArrow, "arrow '" + a.id + "' is a loop");
    }
    adjacency_(static_cast<Eigen::Index>(a.tail), static_cast<Eigen::Index>(a.head)) += 1;
  }
}

Quiver Quiver::from_names(
    std::vector<std::string> vertices,
    const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
    LoopPolicy loops) {
  std::vector<Arrow> resolved;
  resolved.reserve(arrows.size());
  for (const auto& [id, tail, head] : arrows) {
    auto find = [&](const std::string& name) {
      auto it = std::find(vertices.begin(), vertices.end(), name);
      if (it == vertices.end()) {
        throw Error(ErrorKind::DanglingArrow,
                    "arrow '" + id + "' refers to unknown vertex '" + name + "'");
      }
      return static_cast<std::size_t>(it - vertices.begin());
    };
    resolved.push_back({id, find(tail), find(head)});
  }
  return Quiver(std::move(vertices), std::move(resolved), loops);
}

std::optional<std::size_t> Quiver::find_vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::vertex_index(std::string_view name) const {
  if (auto i = find_vertex(name)) return *i;
  throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
}

std::optional<std::size_t> Quiver::find_arrow(std::string_view id) const {
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    if (arrows_[k].id == id) return k;
  }
  return std::nullopt;
}

bool Quiver::has_loops() const {
  return std::any_of(arrows_.begin(), arrows_.end(),
                     [](const Arrow& a) { return a.tail == a.head; });
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t k = 0; k < a.arrows_.size(); ++k) {
    const auto& x = a.arrows_[k];
    const auto& y = b.arrows_[k];
    if (x.id != y.id || x.tail != y.tail || x.head != y.head) return false;
  }
  return true;
}

// ---------------------------------------------------------- vertex ordering

std::vector<std::size_t> VertexOrder::positions() const {
  std::vector<std::size_t> pos(sequence.size());
  for (std::size_t k = 0; k < sequence.size(); ++k) pos[sequence[k]] = k;
  return pos;
}

namespace {

// Closed walk following arrows tail -> head among `alive` vertices, starting
// at the first alive vertex. Every alive vertex must have an outgoing arrow
// into the alive set.
std::vector<std::size_t> find_cycle(const Quiver& q, const std::vector<bool>& alive) {
  const auto n = q.num_vertices();
  std::size_t start = 0;
  while (start < n && !alive[start]) ++start;
  std::vector<long> visit_step(n, -1);
  std::vector<std::size_t> walk;
  std::size_t v = start;
  while (visit_step[v] < 0) {
    visit_step[v] = static_cast<long>(walk.size());
    walk.push_back(v);
    std::size_t next = n;
    for (const auto& a : q.arrows()) {
      if (a.tail == v && alive[a.head]) {
        next = a.head;
        break;
      }
    }
    v = next;
  }
  std::vector<std::size_t> cycle(walk.begin() + visit_step[v], walk.end());
  cycle.push_back(v);
  return cycle;
}

}  // namespace

VertexOrder topological_vertex_order(const Quiver& q) {
  const auto n = q.num_vertices();
  // A vertex may be placed once the heads of all its outgoing arrows are.
  std::vector<std::size_t> pending(n, 0);
  for (const auto& a : q.arrows()) ++pending[a.tail];
  std::vector<bool> placed(n, false);
  VertexOrder order;
  order.sequence.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!placed[v] && pending[v] == 0) {
        pick = v;
        break;
      }
    }
    if (pick == n) {
      std::vector<bool> alive(n);
      for (std::size_t v = 0; v < n; ++v) alive[v] = !placed[v];
      std::vector<std::string> witness;
      for (auto v : find_cycle(q, alive)) witness.push_back(q.vertex_name(v));
      std::string text;
      for (std::size_t k = 0; k < witness.size(); ++k) text += (k ? "->" : "") + witness[k];
      throw CyclicQuiverError(witness, "quiver has a directed cycle " + text);
    }
    placed[pick] = true;
    order.sequence.push_back(pick);
    for (const auto& a : q.arrows()) {
      if (a.head == pick) --pending[a.tail];
    }
  }
  return order;
}

bool is_acyclic(const Quiver& q) {
  try {
    topological_vertex_order(q);
    return true;
  } catch (const CyclicQuiverError&) {
    return false;
  }
}

// -------------------------------------------------------------------- forms

IntMatrix euler_matrix(const Quiver& q) {
  const auto n = static_cast<Eigen::Index>(q.num_vertices());
  return IntMatrix::Identity(n, n) - q.arrow_matrix();
}

IntMatrix lambda_matrix(const Quiver& q) {
  const IntMatrix& a = q.arrow_matrix();
  return a - a.transpose();
}

IntMatrix lambda_matrix(const Quiver& q, std::span<const std::size_t> arrow_subset) {
  const auto n = static_cast<Eigen::Index>(q.num_vertices());
  IntMatrix l = IntMatrix::Zero(n, n);
  for (auto k : arrow_subset) {
    if (k >= q.num_arrows()) throw Error(ErrorKind::InvalidArgument, "arrow index out of range");
    const auto& a = q.arrows()[k];
    l(static_cast<Eigen::Index>(a.tail), static_cast<Eigen::Index>(a.head)) += 1;
    l(static_cast<Eigen::Index>(a.head), static_cast<Eigen::Index>(a.tail)) -= 1;
  }
  return l;
}

static void require_keys(const Quiver& q, const DimVector& g1, const DimVector& g2) {
  if (g1.size() != q.num_vertices() || g2.size() != q.num_vertices()) {
    throw Error(ErrorKind::KeyMismatch, "dimension vector not keyed by the quiver's vertices");
  }
}

long euler_form(const Quiver& q, const DimVector& g1, const DimVector& g2) {
  require_keys(q, g1, g2);
  return bilinear(euler_matrix(q), g1, g2);
}

long lambda(const Quiver& q, const DimVector& g1, const DimVector& g2) {
  require_keys(q, g1, g2);
  return bilinear(lambda_matrix(q), g1, g2);
}

long lambda_restricted(const Quiver& q, std::span<const std::size_t> arrow_subset,
                       const DimVector& g1, const DimVector& g2) {
  require_keys(q, g1, g2);
  return bilinear(lambda_matrix(q, arrow_subset), g1, g2);
}

long lambda_restricted(const Quiver& q, const std::vector<std::string>& arrow_ids,
                       const DimVector& g1, const DimVector& g2) {
  std::vector<std::size_t> subset;
  for (const auto& id : arrow_ids) {
    auto k = q.find_arrow(id);
    if (!k) throw Error(ErrorKind::InvalidArgument, "unknown arrow id '" + id + "'");
    subset.push_back(*k);
  }
  return lambda_restricted(q, subset, g1, g2);
}

// --------------------------------------------------------------- subquivers

static std::vector<std::size_t> sorted_checked(const Quiver& q,
                                               std::span<const std::size_t> subset) {
  std::vector<std::size_t> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw Error(ErrorKind::InvalidArgument, "repeated vertex in subset");
  }
  for (auto v : s) {
    if (v >= q.num_vertices()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
  }
  return s;
}

std::vector<std::size_t> internal_arrows(const Quiver& q,
                                         std::span<const std::size_t> vertex_subset) {
  std::vector<bool> in(q.num_vertices(), false);
  for (auto v : vertex_subset) in.at(v) = true;
  std::vector<std::size_t> result;
  for (std::size_t k = 0; k < q.num_arrows(); ++k) {
    const auto& a = q.arrows()[k];
    if (in[a.tail] && in[a.head]) result.push_back(k);
  }
  return result;
}

Quiver subquiver(const Quiver& q, std::span<const std::size_t> vertex_subset,
                 std::span<const std::size_t> arrow_subset) {
  const auto s = sorted_checked(q, vertex_subset);
  std::vector<std::size_t> local(q.num_vertices(), q.num_vertices());
  std::vector<std::string> names;
  for (std::size_t k = 0; k < s.size(); ++k) {
    local[s[k]] = k;
    names.push_back(q.vertex_name(s[k]));
  }
  std::vector<std::size_t> arrows(arrow_subset.begin(), arrow_subset.end());
  std::sort(arrows.begin(), arrows.end());
  std::vector<Arrow> kept;
  for (auto k : arrows) {
    const auto& a = q.arrows().at(k);
    if (local[a.tail] == q.num_vertices() || local[a.head] == q.num_vertices()) {
      throw Error(ErrorKind::InvalidArgument,
                  "arrow '" + a.id + "' does not lie inside the vertex subset");
    }
    kept.push_back({a.id, local[a.tail], local[a.head]});
  }
  return Quiver(std::move(names), std::move(kept), LoopPolicy::Allow);
}

Quiver induced_subquiver(const Quiver& q, std::span<const std::size_t> vertex_subset) {
  return subquiver(q, vertex_subset, internal_arrows(q, vertex_subset));
}

Quiver induced_subquiver(const Quiver& q, const std::vector<std::string>& names) {
  std::vector<std::size_t> subset;
  for (const auto& name : names) subset.push_back(q.vertex_index(name));
  return induced_subquiver(q, subset);
}

std::string block_name(const Quiver& q, std::span<const std::size_t> block) {
  std::string name = "{";
  for (std::size_t k = 0; k < block.size(); ++k) {
    if (k) name += ',';
    name += q.vertex_name(block[k]);
  }
  return name + "}";
}

static std::vector<std::size_t> block_of_vertex(
    const Quiver& q, const std::vector<std::vector<std::size_t>>& blocks) {
  const auto n = q.num_vertices();
  std::vector<std::size_t> owner(n, blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].empty()) throw Error(ErrorKind::NotAPartition, "empty block");
    for (auto v : blocks[j]) {
      if (v >= n) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
      if (owner[v] != blocks.size()) {
        throw Error(ErrorKind::NotAPartition,
                    "vertex '" + q.vertex_name(v) + "' appears in two blocks");
      }
      owner[v] = j;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (owner[v] == blocks.size()) {
      throw Error(ErrorKind::NotAPartition,
                  "vertex '" + q.vertex_name(v) + "' is not covered by any block");
    }
  }
  return owner;
}

Quiver contraction(const Quiver& q, const std::vector<std::vector<std::size_t>>& blocks,
                   const std::vector<std::vector<std::size_t>>& block_arrows) {
  const auto owner = block_of_vertex(q, blocks);
  std::vector<bool> removed(q.num_arrows(), false);
  for (const auto& arrows : block_arrows) {
    for (auto k : arrows) removed.at(k) = true;
  }
  std::vector<std::string> names;
  for (const auto& b : blocks) names.push_back(block_name(q, b));
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < q.num_arrows(); ++k) {
    if (removed[k]) continue;
    const auto& a = q.arrows()[k];
    arrows.push_back({a.id, owner[a.tail], owner[a.head]});
  }
  return Quiver(std::move(names), std::move(arrows), LoopPolicy::Allow);
}

Quiver contraction(const Quiver& q, const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<std::vector<std::size_t>> internal;
  for (const auto& b : blocks) internal.push_back(internal_arrows(q, b));
  return contraction(q, blocks, internal);
}

std::vector<std::vector<std::size_t>> connected_components(const Quiver& q) {
  const auto n = q.num_vertices();
  std::vector<std::size_t> comp(n, n);
  std::vector<std::vector<std::size_t>> result;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    const auto id = result.size();
    std::vector<std::size_t> stack{s}, members;
    comp[s] = id;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (const auto& a : q.arrows()) {
        for (auto [x, y] : {std::pair{a.tail, a.head}, std::pair{a.head, a.tail}}) {
          if (x == v && comp[y] == n) {
            comp[y] = id;
            stack.push_back(y);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    result.push_back(std::move(members));
  }
  return result;
}

bool is_connected(const Quiver& q) {
  return q.num_vertices() > 0 && connected_components(q).size() == 1;
}

bool isomorphic(const Quiver& a, const Quiver& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_arrows() != b.num_arrows()) return false;
  const auto n = a.num_vertices();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const IntMatrix& ma = a.arrow_matrix();
  const IntMatrix& mb = b.arrow_matrix();
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        ok = ma(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) ==
             mb(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(perm[j]));
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

DimVector restrict_to(const DimVector& g, std::span<const std::size_t> vertices) {
  DimVector r(vertices.size());
  for (std::size_t k = 0; k < vertices.size(); ++k) r[k] = g[vertices[k]];
  return r;
}

DimVector embed_from(const DimVector& local, std::span<const std::size_t> vertices,
                     std::size_t n) {
  if (local.size() != vertices.size()) {
    throw Error(ErrorKind::KeyMismatch, "local vector does not match block size");
  }
  DimVector g(n);
  for (std::size_t k = 0; k < vertices.size(); ++k) g[vertices[k]] = local[k];
  return g;
}

}  // namespace qdilog

std::size_t std::hash<qdilog::DimVector>::operator()(const qdilog::DimVector& g) const noexcept {
  std::size_t h = g.size();
  for (std::size_t i = 0; i < g.size(); ++i) {
    h ^= std::hash<int>{}(g[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
