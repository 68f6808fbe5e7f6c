#include "qdilog/root_order.hpp"

#include <algorithm>
#include <numeric>

namespace qdilog {

std::vector<DimVector> RootOrder::roots() const {
  std::vector<DimVector> out;
  for (const auto& e : entries) out.push_back(e.root);
  return out;
}

std::string to_string(const RootOrder& order) {
  std::string s;
  for (std::size_t u = 0; u < order.entries.size(); ++u) {
    if (u) s += " < ";
    s += to_string(order.entries[u].root);
  }
  return s;
}

std::vector<DimVector> reineke_inner_order(const Quiver& block) {
  const auto roots = positive_roots(block);
  const auto n = roots.size();
  const IntMatrix lam = lambda_matrix(block);
  // before[b] lists roots that must precede b: a must precede b when
  // lambda(b, a) < 0.
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> succ(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && bilinear(lam, roots[b], roots[a]) < 0) {
        succ[a].push_back(b);
        ++indegree[b];
      }
    }
  }
  std::vector<bool> done(n, false);
  std::vector<DimVector> out;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!done[v] && indegree[v] == 0) {
        pick = v;
        break;
      }
    }
    if (pick == n) {
      throw Error(ErrorKind::ConstraintCycle,
                  "root ordering constraints contain a cycle in block with " +
                      std::to_string(block.num_vertices()) + " vertices");
    }
    done[pick] = true;
    out.push_back(roots[pick]);
    for (auto b : succ[pick]) --indegree[b];
  }
  return out;
}

RootOrder admissible_total_order(const Quiver& q, const SubquiverPartition& p) {
  const auto verdict = check_admissible(q, p);
  if (!verdict.admissible) {
    throw Error(ErrorKind::NotAdmissible, "partition " + to_string(q, p) + " is not admissible");
  }
  const auto block_order = topological_vertex_order(contraction_quiver(q, p));
  RootOrder order;
  order.provenance = RootOrder::Provenance::Constructed;
  for (auto j : block_order.sequence) {
    for (const auto& local : reineke_inner_order(p.quivers[j])) {
      order.entries.push_back({embed_from(local, p.blocks[j], q.num_vertices()), j});
    }
  }
  return order;
}

RootOrder partition_roots(const SubquiverPartition& p, std::size_t num_vertices) {
  RootOrder order;
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (const auto& local : positive_roots(p.quivers[j])) {
      order.entries.push_back({embed_from(local, p.blocks[j], num_vertices), j});
    }
  }
  return order;
}

namespace {

bool entry_less(const RootOrder::Entry& a, const RootOrder::Entry& b) {
  if (a.block != b.block) return a.block < b.block;
  return a.root < b.root;
}

}  // namespace

OrderVerdict validate_order(const Quiver& q, const SubquiverPartition& p,
                            const RootOrder& candidate, OrderRules rules) {
  auto expected = partition_roots(p, q.num_vertices()).entries;
  auto given = candidate.entries;
  std::sort(expected.begin(), expected.end(), entry_less);
  std::sort(given.begin(), given.end(), entry_less);
  if (expected != given) {
    throw Error(ErrorKind::InvalidOrder,
                "candidate is not a permutation of the partition's positive roots");
  }

  const IntMatrix lam = lambda_matrix(q);
  std::vector<IntMatrix> inside, outside;
  if (rules == OrderRules::Strict) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      inside.push_back(lambda_matrix(q, p.block_arrows[j]));
      outside.push_back(lam - inside.back());
    }
  }

  const auto& e = candidate.entries;
  for (std::size_t u = 0; u < e.size(); ++u) {
    for (std::size_t v = u + 1; v < e.size(); ++v) {
      OrderViolation bad{u, v, 0, e[u].block == e[v].block, ""};
      if (!bad.same_block) {
        bad.lambda_value = bilinear(lam, e[u].root, e[v].root);
        if (bad.lambda_value > 0) bad.rule = "different blocks need lambda <= 0";
      } else if (rules == OrderRules::Admissible) {
        bad.lambda_value = bilinear(lam, e[u].root, e[v].root);
        if (bad.lambda_value < 0) bad.rule = "same block needs lambda >= 0";
      } else {
        const auto j = e[u].block;
        const long in = bilinear(inside[j], e[u].root, e[v].root);
        const long out = bilinear(outside[j], e[u].root, e[v].root);
        if (in < 0) {
          bad.lambda_value = in;
          bad.rule = "same block needs block-arrow lambda >= 0";
        } else if (out > 0) {
          bad.lambda_value = out;
          bad.rule = "same block needs outside-arrow lambda <= 0";
        }
      }
      if (!bad.rule.empty()) return {false, bad};
    }
  }
  return {};
}

std::vector<RootOrder> brute_force_valid_orders(const Quiver& q, const SubquiverPartition& p,
                                                OrderRules rules, std::size_t max_roots) {
  auto base = partition_roots(p, q.num_vertices());
  const auto r = base.entries.size();
  if (r > max_roots) {
    throw Error(ErrorKind::CapExceeded, "brute-force order search limited to " +
                                            std::to_string(max_roots) + " roots");
  }
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<RootOrder> valid;
  do {
    RootOrder candidate;
    for (auto k : perm) candidate.entries.push_back(base.entries[k]);
    if (validate_order(q, p, candidate, rules).valid) valid.push_back(std::move(candidate));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return valid;
}

}  // namespace qdilog
