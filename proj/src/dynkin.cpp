#include "qdilog/dynkin.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace qdilog {

std::string to_string(const DynkinType& t) {
  const char* f = t.family == DynkinFamily::A ? "A" : t.family == DynkinFamily::D ? "D" : "E";
  return std::string(f) + std::to_string(t.rank);
}

std::variant<DynkinType, NotDynkin> classify_dynkin(const Quiver& q) {
  const auto n = q.num_vertices();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cannot classify an empty quiver");
  if (!is_connected(q)) throw Error(ErrorKind::NotConnected, "quiver is not connected");

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& a : q.arrows()) {
    if (a.tail == a.head) return NotDynkin{"loop arrow at vertex '" + q.vertex_name(a.tail) + "'"};
    auto e = std::minmax(a.tail, a.head);
    if (!edges.insert(e).second) {
      return NotDynkin{"multi-edge between '" + q.vertex_name(e.first) + "' and '" +
                       q.vertex_name(e.second) + "'"};
    }
  }
  if (edges.size() != n - 1) return NotDynkin{"underlying graph contains a cycle"};

  std::vector<std::vector<std::size_t>> nbrs(n);
  for (auto [u, v] : edges) {
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v) {
    if (nbrs[v].size() > 3) {
      return NotDynkin{"vertex '" + q.vertex_name(v) + "' has degree " +
                       std::to_string(nbrs[v].size())};
    }
    if (nbrs[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return DynkinType{DynkinFamily::A, static_cast<int>(n)};
  if (branch.size() > 1) return NotDynkin{"more than one branch vertex"};

  const auto center = branch.front();
  std::vector<int> legs;
  for (auto start : nbrs[center]) {
    int len = 1;
    std::size_t prev = center, cur = start;
    while (nbrs[cur].size() == 2) {
      auto next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  const int rank = static_cast<int>(n);
  if (legs[0] == 1 && legs[1] == 1) return DynkinType{DynkinFamily::D, rank};
  if (legs[0] == 1 && legs[1] == 2 && legs[2] <= 4) return DynkinType{DynkinFamily::E, rank};
  std::ostringstream os;
  os << "branch legs (" << legs[0] << "," << legs[1] << "," << legs[2]
     << ") are not of type D or E";
  return NotDynkin{os.str()};
}

DynkinType require_dynkin(const Quiver& q) {
  auto c = classify_dynkin(q);
  if (auto* bad = std::get_if<NotDynkin>(&c)) {
    throw Error(ErrorKind::NotDynkin, "not a Dynkin quiver: " + bad->reason);
  }
  return std::get<DynkinType>(c);
}

std::size_t root_count(const DynkinType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case DynkinFamily::A: return n * (n + 1) / 2;
    case DynkinFamily::D: return n * (n - 1);
    case DynkinFamily::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return 0;
}

bool root_order_less(const DimVector& a, const DimVector& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return b < a;
}

std::vector<DimVector> positive_roots(const Quiver& q) {
  const auto type = require_dynkin(q);
  // Highest-root coefficients never exceed these, so scanning the smaller box
  // is exhaustive on the full 0..6 box.
  const int kBox = type.family == DynkinFamily::A   ? 1
                   : type.family == DynkinFamily::D ? 2
                   : type.rank == 6                 ? 3
                   : type.rank == 7                 ? 4
                                                    : 6;
  const auto n = q.num_vertices();
  const IntMatrix euler = euler_matrix(q);
  // g^T (E + E^T) g == 2 chi(g, g).
  const IntMatrix sym = euler + euler.transpose();

  std::vector<DimVector> roots;
  DimVector g(n);
  // Odometer over the box.
  while (true) {
    std::size_t i = 0;
    while (i < n && g[i] == kBox) g[i++] = 0;
    if (i == n) break;
    ++g[i];
    if (bilinear(sym, g, g) == 2) roots.push_back(g);
  }
  std::sort(roots.begin(), roots.end(), root_order_less);
  return roots;
}

DimVector KostantPartition::total() const {
  if (roots.empty()) return DimVector();
  DimVector sum(roots.front().size());
  for (std::size_t v = 0; v < roots.size(); ++v) sum += multiplicities[v] * roots[v];
  return sum;
}

std::vector<int> KostantPartition::nonzero_multiplicities() const {
  std::vector<int> out;
  for (int m : multiplicities) {
    if (m != 0) out.push_back(m);
  }
  return out;
}

std::string to_string(const KostantPartition& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t v = 0; v < m.roots.size(); ++v) {
    if (m.multiplicities[v] == 0) continue;
    if (!first) os << ", ";
    first = false;
    os << to_string(m.roots[v]) << ':' << m.multiplicities[v];
  }
  os << '}';
  return os.str();
}

std::vector<KostantPartition> kostant_partitions(const std::vector<DimVector>& roots,
                                                 const DimVector& gamma, std::size_t cap) {
  if (!gamma.is_nonnegative()) {
    throw Error(ErrorKind::InvalidArgument, "dimension vector has a negative entry");
  }
  std::vector<KostantPartition> out;
  std::vector<int> mult(roots.size(), 0);

  std::function<void(std::size_t, const DimVector&)> recurse =
      [&](std::size_t v, const DimVector& rest) {
        if (rest.is_zero()) {
          std::fill(mult.begin() + static_cast<long>(v), mult.end(), 0);
          if (out.size() >= cap) {
            throw Error(ErrorKind::CapExceeded,
                        "Kostant partition count exceeds cap " + std::to_string(cap));
          }
          out.push_back({roots, mult});
          return;
        }
        if (v == roots.size()) return;
        const auto& beta = roots[v];
        if (beta.size() != rest.size()) {
          throw Error(ErrorKind::KeyMismatch, "root and dimension vector differ in length");
        }
        // Largest multiplicity first so the all-in-one partitions come first.
        int max_mult = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < beta.size(); ++i) {
          if (beta[i] > 0) max_mult = std::min(max_mult, rest[i] / beta[i]);
        }
        for (int m = max_mult; m >= 0; --m) {
          mult[v] = m;
          recurse(v + 1, rest - m * beta);
        }
        mult[v] = 0;
      };
  recurse(0, gamma);
  return out;
}

std::vector<KostantPartition> kostant_partitions(const Quiver& q, const DimVector& gamma,
                                                 std::size_t cap) {
  if (gamma.size() != q.num_vertices()) {
    throw Error(ErrorKind::KeyMismatch, "dimension vector not keyed by the quiver's vertices");
  }
  return kostant_partitions(positive_roots(q), gamma, cap);
}

}  // namespace qdilog
