#include "qdilog/partitions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace qdilog {

std::vector<std::size_t> SubquiverPartition::owner(std::size_t num_vertices) const {
  std::vector<std::size_t> o(num_vertices, blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    for (auto v : blocks[j]) o.at(v) = j;
  }
  return o;
}

SubquiverPartition SubquiverPartition::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != blocks.size()) {
    throw Error(ErrorKind::InvalidArgument, "block permutation has the wrong length");
  }
  SubquiverPartition p;
  for (auto j : perm) {
    p.blocks.push_back(blocks.at(j));
    p.block_arrows.push_back(block_arrows.at(j));
    p.quivers.push_back(quivers.at(j));
    p.types.push_back(types.at(j));
  }
  return p;
}

std::string to_string(const Quiver& q, const SubquiverPartition& p) {
  std::string s = "[";
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) s += ",";
    s += block_name(q, p.blocks[j]);
  }
  return s + "]";
}

namespace {

bool is_connected_dynkin(const Quiver& block) {
  if (!is_connected(block)) return false;
  return std::holds_alternative<DynkinType>(classify_dynkin(block));
}

// First spanning arrow subset of size |block| - 1, by arrow index, that is a
// connected Dynkin quiver.
std::optional<std::vector<std::size_t>> dynkin_spanning_arrows(
    const Quiver& q, const std::vector<std::size_t>& block,
    const std::vector<std::size_t>& internal) {
  const std::size_t need = block.size() - 1;
  if (internal.size() < need) return std::nullopt;
  std::vector<bool> pick(internal.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(need), true);
  do {
    std::vector<std::size_t> arrows;
    for (std::size_t k = 0; k < internal.size(); ++k) {
      if (pick[k]) arrows.push_back(internal[k]);
    }
    if (is_connected_dynkin(subquiver(q, block, arrows))) return arrows;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

}  // namespace

SubquiverPartition make_partition(const Quiver& q, std::vector<std::vector<std::size_t>> blocks,
                                  BlockArrows mode) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  // Validates disjointness and coverage.
  contraction(q, blocks);

  SubquiverPartition p;
  for (auto& b : blocks) {
    auto internal = internal_arrows(q, b);
    Quiver induced = subquiver(q, b, internal);
    if (!is_connected(induced)) {
      throw Error(ErrorKind::NotConnected, "block " + block_name(q, b) + " is not connected");
    }
    auto kind = classify_dynkin(induced);
    if (auto* bad = std::get_if<NotDynkin>(&kind)) {
      std::optional<std::vector<std::size_t>> spanning;
      if (mode == BlockArrows::DynkinSpanning) spanning = dynkin_spanning_arrows(q, b, internal);
      if (!spanning) {
        throw Error(ErrorKind::NotDynkin,
                    "block " + block_name(q, b) + " is not Dynkin: " + bad->reason);
      }
      internal = std::move(*spanning);
      induced = subquiver(q, b, internal);
      kind = classify_dynkin(induced);
    }
    p.types.push_back(std::get<DynkinType>(kind));
    p.quivers.push_back(std::move(induced));
    p.block_arrows.push_back(std::move(internal));
    p.blocks.push_back(std::move(b));
  }
  return p;
}

SubquiverPartition make_partition(const Quiver& q,
                                  const std::vector<std::vector<std::string>>& blocks,
                                  BlockArrows mode) {
  std::vector<std::vector<std::size_t>> idx;
  for (const auto& b : blocks) {
    auto& out = idx.emplace_back();
    for (const auto& name : b) out.push_back(q.vertex_index(name));
  }
  return make_partition(q, std::move(idx), mode);
}

std::vector<SubquiverPartition> enumerate_partitions(const Quiver& q, bool admissible_only) {
  const auto n = q.num_vertices();
  std::vector<SubquiverPartition> out;
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<std::size_t>> current;

  std::function<void()> recurse = [&]() {
    std::size_t first = 0;
    while (first < n && assigned[first]) ++first;
    if (first == n) {
      auto p = make_partition(q, current);
      if (!admissible_only || check_admissible(q, p).admissible) out.push_back(std::move(p));
      return;
    }
    std::vector<std::size_t> free;
    for (std::size_t v = first + 1; v < n; ++v) {
      if (!assigned[v]) free.push_back(v);
    }
    // Subsets of the remaining free vertices, joined with `first`.
    const std::size_t count = std::size_t{1} << free.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      std::vector<std::size_t> block{first};
      for (std::size_t k = 0; k < free.size(); ++k) {
        if (mask & (std::size_t{1} << k)) block.push_back(free[k]);
      }
      std::sort(block.begin(), block.end());
      if (!is_connected_dynkin(induced_subquiver(q, block))) continue;
      for (auto v : block) assigned[v] = true;
      current.push_back(block);
      recurse();
      current.pop_back();
      for (auto v : block) assigned[v] = false;
    }
  };
  if (n > 0) recurse();
  return out;
}

Quiver contraction_quiver(const Quiver& q, const SubquiverPartition& p) {
  return contraction(q, p.blocks, p.block_arrows);
}

namespace {

// Shortest directed cycle through `start`, via BFS over arrows.
std::optional<ContractionCycle> shortest_cycle_through(const Quiver& c, std::size_t start) {
  const auto n = c.num_vertices();
  for (const auto& a : c.arrows()) {
    if (a.tail == start && a.head == start) return ContractionCycle{{start, start}, {a.id}};
  }
  std::vector<long> parent_arrow(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < c.num_arrows(); ++k) {
      const auto& a = c.arrows()[k];
      if (a.tail != v) continue;
      if (a.head == start) {
        ContractionCycle cyc;
        std::vector<std::size_t> rev_blocks{start};
        std::vector<std::string> rev_arrows{a.id};
        for (auto u = v; u != start;) {
          rev_blocks.push_back(u);
          const auto& pa = c.arrows()[static_cast<std::size_t>(parent_arrow[u])];
          rev_arrows.push_back(pa.id);
          u = pa.tail;
        }
        rev_blocks.push_back(start);
        cyc.blocks.assign(rev_blocks.rbegin(), rev_blocks.rend());
        cyc.arrows.assign(rev_arrows.rbegin(), rev_arrows.rend());
        return cyc;
      }
      if (!seen[a.head]) {
        seen[a.head] = true;
        parent_arrow[a.head] = static_cast<long>(k);
        queue.push_back(a.head);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

AdmissibilityVerdict check_admissible(const Quiver& q, const SubquiverPartition& p) {
  const Quiver c = contraction_quiver(q, p);
  AdmissibilityVerdict verdict;
  for (std::size_t s = 0; s < c.num_vertices(); ++s) {
    auto cyc = shortest_cycle_through(c, s);
    if (cyc && (!verdict.witness || cyc->length() < verdict.witness->length())) {
      verdict.witness = std::move(cyc);
    }
  }
  verdict.admissible = !verdict.witness;
  verdict.ordered = verdict.admissible;
  for (const auto& a : c.arrows()) {
    if (a.head >= a.tail) verdict.ordered = false;
  }
  return verdict;
}

bool is_contraction_cycle(const Quiver& contracted, const ContractionCycle& c) {
  if (c.blocks.size() != c.arrows.size() + 1 || c.arrows.empty()) return false;
  if (c.blocks.front() != c.blocks.back()) return false;
  for (std::size_t k = 0; k < c.arrows.size(); ++k) {
    auto idx = contracted.find_arrow(c.arrows[k]);
    if (!idx) return false;
    const auto& a = contracted.arrows()[*idx];
    if (a.tail != c.blocks[k] || a.head != c.blocks[k + 1]) return false;
  }
  return true;
}

SubquiverPartition order_blocks(const Quiver& q, const SubquiverPartition& p) {
  const auto verdict = check_admissible(q, p);
  if (!verdict.admissible) {
    throw Error(ErrorKind::NotAdmissible,
                "partition " + to_string(q, p) + " is not admissible");
  }
  const auto order = topological_vertex_order(contraction_quiver(q, p));
  return p.permuted(order.sequence);
}

std::string to_string(const KostantSeries& m) {
  std::string s = "(";
  for (std::size_t j = 0; j < m.per_block.size(); ++j) {
    if (j) s += ", ";
    s += to_string(m.per_block[j]);
  }
  return s + ")";
}

std::vector<KostantSeries> kostant_series(const Quiver& q, const SubquiverPartition& p,
                                          const DimVector& gamma, std::size_t cap) {
  if (gamma.size() != q.num_vertices()) {
    throw Error(ErrorKind::KeyMismatch, "dimension vector not keyed by the quiver's vertices");
  }
  std::vector<std::vector<KostantPartition>> per_block;
  std::size_t total = 1;
  for (std::size_t j = 0; j < p.size(); ++j) {
    per_block.push_back(kostant_partitions(positive_roots(p.quivers[j]),
                                           restrict_to(gamma, p.blocks[j]), cap));
    total *= per_block.back().size();
    if (total > cap) {
      throw Error(ErrorKind::CapExceeded,
                  "Kostant series count exceeds cap " + std::to_string(cap));
    }
  }
  std::vector<KostantSeries> out;
  out.reserve(total);
  std::vector<std::size_t> pick(p.size(), 0);
  for (std::size_t t = 0; t < total; ++t) {
    KostantSeries m;
    for (std::size_t j = 0; j < p.size(); ++j) m.per_block.push_back(per_block[j][pick[j]]);
    out.push_back(std::move(m));
    for (std::size_t j = p.size(); j-- > 0;) {
      if (++pick[j] < per_block[j].size()) break;
      pick[j] = 0;
    }
  }
  return out;
}

}  // namespace qdilog
